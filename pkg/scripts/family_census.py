#!/usr/bin/env python3
"""Census of the constructed families, with optional exact verification.

Counts the order-n*p^3 families for a prime and the order-8n swap pairs
over a range of n, and (with --verify) recomputes every exact image to
confirm the defining properties before printing each row.
"""

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from circlab import (
    ThetaTransform,
    gen_8n_basic,
    gen_np3,
    theta_exact_image,
)


@dataclass(frozen=True)
class CensusConfig:
    p: int
    n_max: int
    full_range: bool
    verify: bool


def parse_config() -> CensusConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=3, help="odd prime (default 3)")
    parser.add_argument("--n-max", type=int, default=3, help="largest n (default 3)")
    parser.add_argument(
        "--full-range",
        action="store_true",
        help="scan seeds up to n*p^2 - 1 instead of n*p - 1",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="recompute every exact image and check the family properties",
    )
    args = parser.parse_args()
    return CensusConfig(args.p, args.n_max, args.full_range, args.verify)


def verify_np3(fam) -> bool:
    # each member must map to the next one under the t = n shift
    v = fam.order
    for i, jumps in enumerate(fam.members):
        from circlab import CirculantGraph

        image = theta_exact_image(
            CirculantGraph(jumps), ThetaTransform(v, fam.p, fam.n)
        )
        if image.circulant_jumps != fam.members[(i + 1) % fam.p]:
            return False
    return True


def verify_8n(fam) -> bool:
    fwd = theta_exact_image(fam.r_graph, fam.transform)
    back = theta_exact_image(fam.s_graph, fam.transform)
    return (
        fwd.circulant_jumps == fam.s_graph.jumps
        and back.circulant_jumps == fam.r_graph.jumps
    )


def main():
    cfg = parse_config()
    start = time.perf_counter()

    print(f"order n*p^3 families, p = {cfg.p}")
    total = 0
    for n in range(1, cfg.n_max + 1):
        fams = gen_np3(cfg.p, n, full_range=cfg.full_range)
        total += len(fams)
        for fam in fams:
            status = ""
            if cfg.verify:
                status = "  ok" if verify_np3(fam) else "  FAILED"
            heads = " ".join(str(m) for m in fam.members)
            print(f"  n={n} k={fam.k:3d}: {heads}{status}")
    print(f"{total} families")

    print()
    print("order 8n swap pairs")
    pairs = 0
    for n in range(2, cfg.n_max + 2):
        for s in range(1, n + 1):
            if n == 2 * s - 1:
                continue
            fam = gen_8n_basic(n, s)
            pairs += 1
            status = ""
            if cfg.verify:
                status = "  ok" if verify_8n(fam) else "  FAILED"
            print(f"  n={n} s={s}: {fam.r_graph} <-> {fam.s_graph}{status}")
    print(f"{pairs} pairs")

    print()
    print(f"done in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
