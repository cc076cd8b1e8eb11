#!/usr/bin/env python3
"""Write connected_n{1..7}.g6 from the networkx graph atlas (all graphs up to 7 vertices)."""
import sys
from pathlib import Path

import networkx as nx


def main(out_dir: str) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    by_order = {n: [] for n in range(1, 8)}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        by_order[n].append(nx.to_graph6_bytes(g, header=False).decode().strip())
    for n, lines in by_order.items():
        (out / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(lines)}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
