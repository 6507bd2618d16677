"""Two marked vertices: where AT, paintability and choosability come apart.

For a single marked vertex the three properties coincide.  With two marked vertices
they do not, and the search below lists the 2-connected unstretched graphs where AT fails.

    python3 demos/two_marked.py [n_max]
"""

import sys

from alontarsi.coloring import compare_deciders
from alontarsi.graph import SPLIT_G1, SPLIT_G2, LabeledPair
from alontarsi.orient import indegree_demand
from alontarsi.sweeps import search_two_marked


def main(n_max=6):
    for name, (g, pair) in (("G1", SPLIT_G1), ("K_2,3", SPLIT_G2)):
        f = LabeledPair.marked(g, *pair).degree_bound()
        r = compare_deciders(g, f)
        print(f"{name}, marked {pair}: AT={r.at} paintable={r.paintable} choosable={r.choosable}")
    g, pair = SPLIT_G2
    f = LabeledPair.marked(g, *pair).degree_bound()
    print(f"  K_2,3 needs in-degree at least {indegree_demand(g, f)} but has {g.m} edges")

    print()
    cat = search_two_marked(n_max, "at")
    print(f"{'n':>3} {'graphs':>7} {'pair orbits':>12} {'raw pairs':>10}")
    for n, row in sorted(cat.by_n.items()):
        print(f"{n:>3} {row['graphs']:>7} {row['pair_orbits']:>12} {row['raw_pairs']:>10}")
    t = cat.totals()
    print(f"all {t['graphs']:>7} {t['pair_orbits']:>12} {t['raw_pairs']:>10}   ({cat.wall_time}s)")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
