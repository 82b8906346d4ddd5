#!/usr/bin/env python3
"""Regenerate data/graphs/graphs_n{0..7}.g6 from the networkx graph atlas.

The atlas lists every graph on at most 7 vertices exactly once up to
isomorphism, ordered by vertex count, then edge count.
"""
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx


def main(out_dir: str) -> None:
    by_n = defaultdict(list)
    for g in nx.graph_atlas_g():
        by_n[g.number_of_nodes()].append(g)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n, gs in sorted(by_n.items()):
        with open(out / f"graphs_n{n}.g6", "w") as f:
            for g in gs:
                g = nx.convert_node_labels_to_integers(g)
                f.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
        print(n, len(gs))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/graphs")
