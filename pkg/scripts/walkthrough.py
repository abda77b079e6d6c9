#!/usr/bin/env python3
"""Guided tour: build a graph, scan both isomorphism families, adjudicate.

Mirrors the exploration a user would do in the web UI, but entirely via
library calls.  Run with no arguments.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from circlab import (
    ThetaTransform,
    UnitMultiplier,
    adams_image,
    adjacency,
    classify_pair,
    classify_theta,
    isomorphic,
    parse_graph,
    theta_exact_image,
    triangle_count,
    type1_set,
    type2_set,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


def main():
    base = parse_graph("C27(1,3,8,10)")

    banner(f"Base graph {base}")
    print(f"order {base.order}, degree {base.degree}, edges {base.edge_count}")
    print(f"full closure literal: {base.full_literal()}")
    print(f"triangles: {triangle_count(base)}")

    banner("Unit-multiplier orbit")
    t1 = type1_set(base)
    for member in t1.members:
        print(f"  {member}  (x = {t1.witness_for(member).x})")

    banner("Residue-shift scan, m = 3")
    t2 = type2_set(base, 3)
    for member in t2.members:
        print(f"  {member}")
    print(f"first shift that works: t = {t2.t1}, period = {t2.period}")

    banner("Stepping one shift at a time")
    for t in range(4):
        transform = ThetaTransform(base.order, 3, t)
        image = theta_exact_image(base, transform)
        cls = classify_theta(base, transform)
        label = str(image.circulant_jumps) if image.is_circulant else "non-circulant"
        print(f"  t = {t}: {label:18s} {cls.tag}")

    banner("Unit images of the base")
    for x in (2, 4):
        image = adams_image(base, UnitMultiplier(base.order, x))
        print(f"  x = {x}: {base} -> {image}")

    banner("Adjudicating the classic order-16 pair")
    a, b = parse_graph("C16(1,2,7)"), parse_graph("C16(2,3,5)")
    perm = isomorphic(a, b)
    print(f"  {a} ~ {b}: {classify_pair(a, b)}")
    print(f"  explicit vertex bijection: {perm}")
    print(f"  edge check: {sorted(adjacency(b).edges) == sorted((min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in adjacency(a).edges)}")
    c = parse_graph("C16(1,3,7)")
    print(f"  {c} ~ {b}: {classify_pair(c, b)}")


if __name__ == "__main__":
    main()
