"""Classify a handful of pairs (G, h_x) and show the certificate behind each verdict.

AT pairs get an orientation whose even and odd Eulerian subgraph counts differ;
the rest get a list assignment of sizes d - h_x with no proper colouring.

    python3 demos/at_certificates.py
"""

from alontarsi.certificates import verify_certificate
from alontarsi.cli import classify_one
from alontarsi.graph import Graph, complete_graph, cycle_graph, glue, theta_graph
from alontarsi.graph6 import emit_graph6

EXAMPLES = [
    ("K4 minus an edge, x of degree 3", Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), 2),
    ("K5 minus an edge at x", Graph(5, [e for e in complete_graph(5).edges if e != (0, 1)]), 0),
    ("theta with paths 2, 2, 3, x a pole", theta_graph((2, 2, 3)), 0),
    ("two squares sharing x", glue(cycle_graph(4), cycle_graph(4), 0, 0)[0], 0),
    ("five-cycle", cycle_graph(5), 0),
    ("K5", complete_graph(5), 0),
]


def main():
    for title, g, x in EXAMPLES:
        res, _ = classify_one(emit_graph6(g), x, None, certify=True, oracle=True)
        cert = res["certificate"]
        print(f"{title}: at={res['at']} case={res['case']} oracle_at={res['oracle_at']}")
        if res["at"]:
            print(f"  {res['certificate_kind']} orientation {cert['orientation']}  EE={cert['EE']} EO={cert['EO']}")
        else:
            print(f"  lists {cert['lists']}")
        print(f"  re-check: {verify_certificate(cert).message}")


if __name__ == "__main__":
    main()
