"""Compare the assembled Hilbert series with symmetrizer ranks bidegree by
bidegree.  Cutoff 5 is optional and much slower than the default 4.

    python3 scripts/oracle_check.py --case t-case --char 0 --cutoff 4
"""

import argparse
import sys
import time

from workbench.adjoint import analyse_pair
from workbench.nichols import DEFAULT_BUDGET, FactorLibrary, hilbert_from_roots, verify_bigraded
from workbench.scenarios import ScenarioConfig, build_pair
from workbench.weylgroupoid import longest_word_roots, root_modules


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--case", choices=("t-case", "gamma4-case"), nargs="*", default=["t-case", "gamma4-case"])
    ap.add_argument("--char", type=int, choices=(0, 2), nargs="*", default=[0, 2])
    ap.add_argument("--cutoff", type=int, default=4)
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = ap.parse_args()
    status = 0
    for case in args.case:
        for char in args.char:
            _, v, w, _ = build_pair(ScenarioConfig(case, characteristic=char))
            rs = longest_word_roots(analyse_pair(v, w).cartan)
            lib = FactorLibrary()
            series = hilbert_from_roots(rs, [lib.lookup(m)[1] for m in root_modules(v, w, rs.word)])
            t0 = time.perf_counter()
            rows = verify_bigraded(v, w, series, args.cutoff, budget=args.budget)
            bad = [r for r in rows if not r.ok]
            print(f"{case} char {char}: {len(rows) - len(bad)}/{len(rows)} bidegrees agree "
                  f"({time.perf_counter() - t0:.1f} s)")
            for r in rows:
                print(f"  {r.bidegree}: series {r.expected:5d}  rank {r.rank:5d}{'' if r.ok else '  MISMATCH'}")
            status |= bool(bad)
    return status


if __name__ == "__main__":
    sys.exit(main())
