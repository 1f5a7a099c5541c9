"""Run every claim suite at full desk scale and print one line per claim.

Exit code is the number of failing claims.  --quick shrinks the sweeps for
a fast smoke run.
"""

import argparse
import sys

sys.path.insert(0, "src")

from cyclic_descents.verify import (check_bijection, check_colored,
                                    check_corollary_counts,
                                    check_elizalde_equivalence,
                                    check_inverses, check_moments,
                                    check_order_swap_properties,
                                    check_phi_descents, check_stat_gaps)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--seed", type=int, default=20260823)
    args = ap.parse_args()

    if args.quick:
        top, inv_top, samples = 5, 4, 1000
    else:
        top, inv_top, samples = 7, 6, 10000

    results = []
    for n in range(1, top + 1):
        results.append(check_phi_descents(n, threads=args.threads))
    for n in range(1, inv_top + 1):
        results.append(check_bijection(n, "D"))
        results.append(check_bijection(n, "Dbar"))
        results.append(check_inverses(n))
        results.append(check_corollary_counts(n))
    for n in range(1, top + 1):
        results.append(check_elizalde_equivalence(n))
    for n in range(1, 4):
        for r in range(1, 4):
            results.append(check_colored(n, r))
    results.append(check_moments(5, 6 if args.quick else 7))
    results.append(check_stat_gaps(top))
    results.append(check_order_swap_properties(count=samples, degree=10,
                                               seed=args.seed))

    bad = 0
    for r in results:
        print(r.line())
        bad += 0 if r.passed else 1
    print(f"{len(results) - bad}/{len(results)} claims pass")
    return bad


if __name__ == "__main__":
    raise SystemExit(main())
