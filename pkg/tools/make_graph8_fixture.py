"""Regenerate fixtures/graph8.g6: one graph6 line per isomorphism class on 8 vertices.

Dev-only tool (needs networkx and pynauty, not package dependencies).  Every
order-8 graph is an order-7 graph plus one vertex, so the 1044 order-7 atlas
graphs are extended by all 128 neighbourhoods and deduplicated on nauty's
canonical certificate.  The result must contain exactly 12346 graphs.

    python tools/make_graph8_fixture.py [out_path]
"""

import sys
from pathlib import Path

import networkx as nx
import pynauty

EXPECTED = 12346


def certificate(n, rows):
    g = pynauty.Graph(n, adjacency_dict={v: [u for u in range(n) if rows[v] >> u & 1] for v in range(n)})
    return pynauty.certificate(g)


def main(out):
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    assert len(base) == 1044, len(base)
    seen = {}
    for g in base:
        rows = [0] * 8
        for u, v in g.edges():
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for nb in range(128):
            ext = list(rows)
            for u in range(7):
                if nb >> u & 1:
                    ext[u] |= 1 << 7
            ext[7] = nb
            cert = certificate(8, ext)
            if cert not in seen:
                seen[cert] = ext
    assert len(seen) == EXPECTED, len(seen)
    lines = []
    for rows in seen.values():
        h = nx.Graph()
        h.add_nodes_from(range(8))
        h.add_edges_from((u, v) for u in range(8) for v in range(u + 1, 8) if rows[u] >> v & 1)
        lines.append(nx.to_graph6_bytes(h, header=False).decode().strip())
    lines.sort()
    Path(out).write_text(">>graph6<<" + lines[0] + "\n" + "\n".join(lines[1:]) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "fixtures" / "graph8.g6")
