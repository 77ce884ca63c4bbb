"""Locate each catalogue quandle as a union of conjugacy classes in a finite
quotient of its enveloping group and print the structural data found.

    python3 scripts/classify_quandles.py
"""

import sys

from workbench.scenarios import ScenarioConfig, run_classification


def main() -> int:
    rep = run_classification(ScenarioConfig("classification"))
    for row in rep.data["classification"]:
        print(f"{row['quandle']:10s} {row['enveloping_group']:8s} quotient {row.get('quotient_order')}  "
              f"classes {row.get('classes')}  {row.get('structure', '')}")
        if "sigma" in row:
            print(f"{'':10s} sigma {row['sigma']}  tau {row['tau']}")
    fail = rep.first_failure()
    if fail:
        print(f"first failure: {fail.name}: {fail.witness}")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
