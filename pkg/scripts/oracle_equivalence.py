#!/usr/bin/env python3
"""Compare normal-form multiplication with the function representation.

Draws random pairs (m, n <= 3, degree <= 4, |coeff| <= 9) and reports any
pair on which the two products differ.

    python scripts/oracle_equivalence.py --pairs 100000 --seed 1
"""
import argparse
import random
import time

from wreathz.sampling import random_element
from wreathz.wreath import GroupContext, from_fnrep, fnrep_mul, mul, to_fnrep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    bad = 0
    for i in range(args.pairs):
        ctx = GroupContext(rng.randint(1, 3), rng.randint(1, 3))
        g, h = random_element(rng, ctx), random_element(rng, ctx)
        via_fn = from_fnrep(ctx, fnrep_mul(to_fnrep(g), to_fnrep(h)))
        if mul(g, h) != via_fn:
            bad += 1
            print(f"mismatch #{bad}: g = {g}, h = {h}")
    dt = time.perf_counter() - t0
    print(f"{args.pairs} pairs, {bad} mismatches, {dt:.1f} s")
    return bad


if __name__ == "__main__":
    raise SystemExit(1 if main() else 0)
