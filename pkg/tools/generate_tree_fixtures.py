#!/usr/bin/env python3
"""Regenerate src/perfcoal/data/trees_upto9.g6 (all free trees, n = 1..9).

Development-time helper only; the package ships the generated file so the
tree suite has no runtime dependency on an external enumerator.  Requires
networkx.  Expected counts per order: 1 1 1 2 3 6 11 23 47.
"""

import sys
from pathlib import Path

import networkx as nx

EXPECTED = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


def tree_lines():
    yield nx.to_graph6_bytes(nx.empty_graph(1), header=False).decode().strip()
    yield nx.to_graph6_bytes(nx.path_graph(2), header=False).decode().strip()
    for n in range(3, 10):
        got = 0
        for t in nx.nonisomorphic_trees(n):
            got += 1
            yield nx.to_graph6_bytes(t, header=False).decode().strip()
        assert got == EXPECTED[n], f"n={n}: enumerated {got}, expected {EXPECTED[n]}"


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "src" / "perfcoal" / "data" / "trees_upto9.g6"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = list(tree_lines())
    assert len(lines) == sum(EXPECTED.values())
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} trees to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
