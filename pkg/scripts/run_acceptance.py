#!/usr/bin/env python3
"""Run every acceptance check at full size and print one PASS/FAIL line each.

    python scripts/run_acceptance.py [--seed 20240601] [--only 1 5 8] [--json out.json]
"""
import argparse
import json
import random
import sys

from wreathz import checks

LIMITS = {1: 60, 2: 10, 3: 30, 4: 10, 5: 60, 6: 60, 7: 60, 8: 60, 9: 30, 10: 120, 11: 600}


def run(number, seed):
    rng = random.Random(seed + number)
    return {
        1: lambda: checks.check_mul_oracle(rng),
        2: lambda: checks.check_codecs(rng),
        3: lambda: checks.check_cyc_grid(),
        4: lambda: checks.check_div_grid(),
        5: lambda: checks.check_exponentiation(rng),
        6: lambda: checks.check_action(rng),
        7: lambda: checks.check_basis_recognition(rng),
        8: lambda: checks.check_roundtrip(rng),
        9: lambda: checks.check_lcs(rng),
        10: lambda: checks.check_gs(rng),
        11: lambda: checks.check_condensation(rng),
    }[number]()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--only", type=int, nargs="*", default=sorted(LIMITS))
    ap.add_argument("--json", help="also write the results to this file")
    args = ap.parse_args()

    rows, all_ok = [], True
    for number in args.only:
        res = run(number, args.seed)
        ok = res.ok and res.seconds < LIMITS[number]
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {res.name}: "
              f"{res.passed} passed, {res.failed} failed, "
              f"{res.seconds:.1f} s (limit {LIMITS[number]} s)", flush=True)
        for detail in res.failures:
            print(f"    {detail}")
        rows.append({"criterion": number, "name": res.name, "passed": res.passed,
                     "failed": res.failed, "seconds": round(res.seconds, 2), "ok": ok})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"seed": args.seed, "results": rows}, fh, indent=2)
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
