#!/usr/bin/env python3
"""Run the full battery of identity checks and print a one-line summary
per check.

Covers the fixed worked instances that the test suite also pins, then a
seeded randomized sweep over every theorem id. Exits nonzero if any
check fails, so this doubles as a smoke test for a fresh checkout:

    python3 scripts/run_verification_suite.py --seed 7 --count 10
"""

import argparse
import random
import sys

sys.path.insert(0, "src")

from schurdet import (IndexedMatrix, SkewShape, SuiteConfig, bazin_check,
                      run_suite, verify_K, verify_LP, verify_cor44,
                      verify_cor45, verify_cor46, verify_gen_HG,
                      verify_giambelli, verify_mpp)

BIG = ((6, 6, 6, 3, 3), (4, 3, 2), (7, 6, 6, 5, 3, 2))


def fixed_reports():
    lam, mu, nu = BIG
    out = []
    out += list(verify_LP(lam, mu, nu, 6))
    out += list(verify_K(lam, mu, nu, 6))
    out.append(verify_cor44(lam, mu))
    out.append(verify_cor45(lam, mu))
    out.append(verify_cor46(lam, mu))
    out.append(verify_gen_HG((8, 8, 8, 6, 6, 5, 4), (8, 8, 6, 6, 6, 3, 3),
                             (4, 3)))
    out.append(verify_giambelli([4, 2, 1], [3, 1, 0], [], []))
    out.append(verify_mpp((2, 1), (1,), 2, [0, 0, 0, 0]))
    rng = random.Random(60006)
    for _ in range(10):
        k = rng.randint(1, 3)
        w = rng.randint(k, 6)
        pool = w + k + rng.randint(0, 2)
        lo = rng.randint(-2, 2)
        M = IndexedMatrix(lo, [[rng.randint(-9, 9) for _ in range(w)]
                               for _ in range(pool)])
        idxs = rng.sample(range(lo, lo + pool), 2 * k + (w - k))
        out.append(bazin_check(M, idxs[:k], idxs[k:2 * k], idxs[2 * k:]))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=5,
                    help="random instances per theorem id")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    reports = fixed_reports()
    reports += run_suite(SuiteConfig(seed=args.seed, count=args.count,
                                     threads=args.threads))

    bad = 0
    for rep in reports:
        mark = rep.verdict
        if not rep.ok:
            bad += 1
            mark += "  <--"
        print("%-8s k=%-2d %8.1fms  %s" % (rep.theorem_id, rep.k,
                                           rep.elapsed, mark))
    tally = {}
    for rep in reports:
        tally[rep.verdict] = tally.get(rep.verdict, 0) + 1
    print("total: %d  %s" % (len(reports),
                             "  ".join("%s=%d" % kv for kv in sorted(tally.items()))))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
