"""Run every config in configs/ and write JSON and markdown reports to reports/.

    python3 scripts/run_scenarios.py [--configs DIR] [--out DIR]
"""

import argparse
import sys
import time
from pathlib import Path

from workbench.scenarios import ConfigError, parse_config, run_scenario

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--configs", type=Path, default=ROOT / "configs")
    ap.add_argument("--out", type=Path, default=ROOT / "reports")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for path in sorted(args.configs.glob("*.cfg")):
        try:
            cfg = parse_config(path.read_text())
        except ConfigError as exc:
            print(f"{path.name}: config error: {exc}")
            status = 2
            continue
        t0 = time.perf_counter()
        rep = run_scenario(cfg)
        (args.out / f"{path.stem}.json").write_text(rep.dumps())
        (args.out / f"{path.stem}.md").write_text(rep.markdown())
        fail = rep.first_failure()
        n_ok = sum(c.passed for c in rep.checks)
        print(f"{path.name:36s} {n_ok:3d}/{len(rep.checks):<3d} {time.perf_counter() - t0:6.1f} s"
              + (f"  first failure: {fail.name}" if fail else ""))
    return status


if __name__ == "__main__":
    sys.exit(main())
