#!/usr/bin/env python3
"""Exhaustive A4 run: enumerate the catalog, sweep the exchange graph, and
cross-check the vertex count against brute-force completion search.

Takes well under a minute; kept out of the default pytest run only because
it is the longest single job in the suite (pytest -m deep runs it too).
"""

import time

from ppalg.catalog import build_catalog
from ppalg.cluster import count_complete_rigid_exhaustive, exchange_graph


def main():
    t0 = time.time()
    cat = build_catalog("A4")
    print(f"catalog: {len(cat.entries)} indecomposables, r = {cat.r} "
          f"[{time.time() - t0:.1f}s]")

    t1 = time.time()
    g = exchange_graph(cat, progress=print)
    print(f"exchange graph: {len(g)} vertices, {g.num_edges} edges "
          f"[{time.time() - t1:.1f}s]")
    degrees = {len(g.neighbors(v)) for v in range(len(g))}
    print(f"vertex degrees: {sorted(degrees)} (expected {{{cat.r - cat.n}}})")

    t2 = time.time()
    brute = count_complete_rigid_exhaustive(cat)
    print(f"brute-force completions: {brute} [{time.time() - t2:.1f}s]")

    ok = len(g) == brute == 672 and degrees == {cat.r - cat.n}
    print(f"total {time.time() - t0:.1f}s: {'all checks pass' if ok else 'MISMATCH'}")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
