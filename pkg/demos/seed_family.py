"""Walk through the three seed pairs that are not AT and what stretching does to them.

    python3 demos/seed_family.py
"""

from alontarsi.classifier import family_by_stretching, membership_d, seed_pairs, stretch_bold
from alontarsi.coloring import bad_lists_for_d, exists_proper_coloring
from alontarsi.graph6 import emit_graph6
from alontarsi.orient import is_pair_at


def describe(p, title):
    mem = membership_d(p)
    lists = bad_lists_for_d(p, mem)
    at = is_pair_at(p, symmetry=True) is not None
    print(f"{title}: {emit_graph6(p.graph)}  n={p.graph.n} m={p.graph.m} x={p.x}")
    print(f"  membership {mem.verdict}; exhaustive AT search says {'AT' if at else 'not AT'}")
    print(f"  lists {lists.to_json()}")
    print(f"  colourable from these lists: {exists_proper_coloring(p.graph, lists) is not None}")


def main():
    names = ["K4, apex x", "T-graph with all apex paths of length 2", "Moser spindle"]
    seeds = seed_pairs()
    for (p, _), name in zip(seeds, names):
        describe(p, name)

    # stretch one bold edge of the K4 seed: the new pair is again in the family
    p, bold = seeds[0]
    q, _ = stretch_bold(p, bold, sorted(bold)[0])
    print()
    describe(q, "K4 seed after one stretch")

    print()
    fam = family_by_stretching(11)
    by_n = {}
    for q, k in fam:
        by_n[q.graph.n] = by_n.get(q.graph.n, 0) + 1
    print("family members up to isomorphism, by number of vertices:", dict(sorted(by_n.items())))


if __name__ == "__main__":
    main()
