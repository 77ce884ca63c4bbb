"""Enumerate degree-2 representations of the centralizer of z and report,
for each (alpha, beta, sigma(z), epsilon), whether X_1 is simple and for
which rho(z) X_2 vanishes.  Writes a CSV table.

    python3 scripts/degree2_enumeration.py --out reports/degree2.csv
"""

import argparse
import csv
import sys
from pathlib import Path

from workbench.adjoint import compute_ladder
from workbench.fpgroup import t_presentation, todd_coxeter
from workbench.scalars import FieldSpec, format_scalar
from workbench.scenarios import TCase
from workbench.ydmodule import InvalidCharacterError, RepSpec2, induce_deg2, is_absolutely_simple


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("reports/degree2.csv"))
    args = ap.parse_args()
    fld = FieldSpec(0, 12)
    pres = t_presentation()
    img = todd_coxeter(pres, [pres.parse_word("z^12"), pres.parse_word("x^12")])
    tc = TCase(img)
    roots = fld.roots_of_unity()
    betas = [b for b in roots if b * b + b + 1 == 0]
    rows = []
    for eps in (fld.one(), -fld.one()):
        for sz in roots:
            try:
                w = tc.module_w(tc.sigma(-fld.one(), eps, sz))
            except InvalidCharacterError:
                continue
            for a in roots:
                for b in betas:
                    x1 = compute_ladder(induce_deg2(img, RepSpec2(tc.z, a, b), fld.one()), w, 1).entries[0]
                    simple = is_absolutely_simple(x1).simple
                    vanishing = []
                    if simple:
                        for rz in roots:
                            lad = compute_ladder(induce_deg2(img, RepSpec2(tc.z, a, b), rz), w, 2)
                            if lad.dims[1] == 0:
                                vanishing.append(format_scalar(rz))
                    rows.append([format_scalar(eps), format_scalar(sz), format_scalar(a), format_scalar(b),
                                 simple, (1 - sz * a) * (1 - sz * a * b) == 0, " ".join(vanishing)])
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["epsilon", "sigma_z", "alpha", "beta", "x1_simple", "criterion", "rho_z_with_x2_zero"])
        out.writerows(rows)
    agree = sum(r[4] == r[5] for r in rows)
    print(f"{len(rows)} assignments, X_1 criterion agrees on {agree}; "
          f"{sum(r[4] for r in rows)} simple; table written to {args.out}")
    return 0 if agree == len(rows) else 1


if __name__ == "__main__":
    sys.exit(main())
