"""Command line entry point ``workbench``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
configuration or engine error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .adjoint import compute_ladder
from .fpgroup import EnumerationOverflowError, Presentation, gamma_presentation, t_presentation, todd_coxeter
from .nichols import dimension, hilbert_from_roots, verify_bigraded
from .quandle import CATALOGUE, catalogue_quandle, enveloping_presentation, parse_quandle
from .scalars import format_scalar
from .scenarios import (
    CASES,
    ConfigError,
    ScenarioConfig,
    build_pair,
    gamma4_hilbert_display,
    parse_config,
    run_scenario,
    t_hilbert_display,
)

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _config(args, case: str) -> ScenarioConfig:
    text = Path(args.config).read_text() if getattr(args, "config", None) else ""
    if "case" not in {ln.split("=", 1)[0].strip() for ln in text.splitlines() if "=" in ln}:
        text = f"case = {case}\n" + text
    cfg = parse_config(
        text,
        characteristic=getattr(args, "char", None),
        oracle_degree=getattr(args, "oracle_degree", None),
        ladder_max_m=getattr(args, "max_m", None),
    )
    if cfg.case != case:
        raise ConfigError(f"config file is for {cfg.case}, command line asks for {case}")
    return cfg


def cmd_scenario(args) -> int:
    cfg = _config(args, args.case)
    rep = run_scenario(cfg)
    text = rep.dumps()
    if args.report:
        Path(args.report).write_text(text)
    if args.markdown:
        Path(args.markdown).write_text(rep.markdown())
    for c in rep.checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}")
    fail = rep.first_failure()
    print(f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks passed"
          + (f"; first failure: {fail.name} ({fail.witness})" if fail else ""))
    return EXIT_OK if rep.passed else EXIT_FAIL


def _group_presentation(name: str) -> Presentation:
    if name == "T":
        return t_presentation()
    if name.startswith("gamma"):
        return gamma_presentation(int(name[len("gamma"):]))
    raise ConfigError(f"unknown group {name!r}; use T or gammaN")


def cmd_group(args) -> int:
    pres = _group_presentation(args.group)
    extra = [pres.parse_word(w.strip()) for w in args.relators.split(",") if w.strip()]
    img = todd_coxeter(pres, extra, max_cosets=args.max_cosets)
    print(f"order {img.order}")
    for cls in img.conjugacy_classes():
        rep = img[cls[0]]
        print(f"class of {rep.text() or '1'}: size {len(cls)}, element order {rep.order()}")
    return EXIT_OK


def cmd_quandle(args) -> int:
    if args.file:
        q = parse_quandle(Path(args.file).read_text())
    elif args.name in CATALOGUE:
        q = catalogue_quandle(args.name)
    else:
        raise ConfigError(f"unknown quandle {args.name!r}; catalogue: {', '.join(CATALOGUE)}")
    print(q.to_text(), end="")
    print("orbits:", [[i + 1 for i in o] for o in q.orbits()])
    if args.envelope:
        print(enveloping_presentation(q).to_text(), end="")
    return EXIT_OK


def cmd_ladder(args) -> int:
    cfg = _config(args, args.case)
    _, v, w, params = build_pair(cfg)
    print("parameters:", {k: format_scalar(x) for k, x in params.items()})
    for name, (a, b) in (("V,W", (v, w)), ("W,V", (w, v))):
        lad = compute_ladder(a, b, cfg.ladder_max_m, route=args.route)
        tail = "" if lad.terminated else " (not terminated)"
        print(f"X_m^{{{name}}} dims: {list(lad.dims)}{tail}")
    return EXIT_OK


def cmd_hilbert(args) -> int:
    from .adjoint import analyse_pair
    from .nichols import FactorLibrary
    from .weylgroupoid import longest_word_roots, root_modules

    cfg = _config(args, args.case)
    if args.display:
        series = t_hilbert_display(cfg.characteristic) if cfg.case == "t-case" else gamma4_hilbert_display(cfg.characteristic)
    else:
        _, v, w, _ = build_pair(cfg)
        rs = longest_word_roots(analyse_pair(v, w, cfg.ladder_max_m).cartan)
        lib = FactorLibrary()
        factors = [lib.lookup(m)[1] for m in root_modules(v, w, rs.word, cfg.ladder_max_m)]
        series = hilbert_from_roots(rs, factors)
    if args.json:
        print(json.dumps(series.to_json()))
    else:
        print(series.to_text())
    print(f"dimension {dimension(series)}")
    status = EXIT_OK
    if args.verify is not None:
        _, v, w, _ = build_pair(cfg)
        for c in verify_bigraded(v, w, series, args.verify):
            print(f"{c.bidegree}: series {c.expected}, rank {c.rank}{'' if c.ok else '  MISMATCH'}")
            if not c.ok:
                status = EXIT_FAIL
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="workbench", description="Nichols algebras over quotients of T and Gamma_n")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("scenario", help="run a case study and write a report")
    s.add_argument("case", choices=CASES)
    s.add_argument("--config")
    s.add_argument("--char", type=int, choices=(0, 2))
    s.add_argument("--oracle-degree", type=int)
    s.add_argument("--max-m", type=int)
    s.add_argument("--report")
    s.add_argument("--markdown")
    s.set_defaults(func=cmd_scenario)

    g = sub.add_parser("group", help="enumerate a finite quotient of T or Gamma_n")
    g.add_argument("group", help="T or gammaN")
    g.add_argument("--relators", default="", help="comma-separated extra relators")
    g.add_argument("--max-cosets", type=int, default=10**6)
    g.set_defaults(func=cmd_group)

    q = sub.add_parser("quandle", help="print a catalogue quandle or one read from a file")
    q.add_argument("name", nargs="?", default="")
    q.add_argument("--file")
    q.add_argument("--envelope", action="store_true")
    q.set_defaults(func=cmd_quandle)

    for name, fn, helptext in (("ladder", cmd_ladder, "adjoint ladder dimensions"), ("hilbert", cmd_hilbert, "Hilbert series")):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("case", choices=("t-case", "gamma4-case"))
        c.add_argument("--config")
        c.add_argument("--char", type=int, choices=(0, 2))
        c.add_argument("--max-m", type=int)
        if name == "ladder":
            c.add_argument("--route", choices=("full", "generators"), default="full")
        else:
            c.add_argument("--display", action="store_true", help="closed form instead of the root product")
            c.add_argument("--json", action="store_true")
            c.add_argument("--verify", type=int, metavar="DEGREE", help="compare with symmetrizer ranks")
        c.set_defaults(func=fn)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, OSError, EnumerationOverflowError, ValueError, RuntimeError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
