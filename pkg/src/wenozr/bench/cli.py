"""Command-line harness.

Subcommands: ``run`` (one experiment), ``table`` (advection convergence
tables), ``probe`` (weights near a jump), ``suite`` (every registered
problem) and ``golden`` (compare a CSV against a golden file).

Exit codes: 0 success, 1 a golden comparison failed, 2 usage or runtime
error. The output root defaults to ``$WENOZR_OUTPUT`` or
``./wenozr-output``.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from wenozr.bench import io
from wenozr.bench.norms import convergence_table
from wenozr.bench.probe import PROBE_ABSCISSAE, weight_probe, weight_profile
from wenozr.bench.problems import REGISTRY, get_problem
from wenozr.weights import SchemeSpec

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

OUTPUT_ENV = "WENOZR_OUTPUT"
CONFIG_KEYS = ("problem", "scheme", "p", "epsilon", "N", "T", "dt_coefficient", "output")
ALL_SCHEMES = ("js", "m", "z", "zr")

logger = logging.getLogger("wenozr")


class UsageError(Exception):
    pass


def read_config(path) -> dict[str, str]:
    """Parse a ``key=value`` config file; ``#`` starts a comment."""
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        k, v = (s.strip() for s in line.split("=", 1))
        k = k.replace("-", "_")
        if k not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {k!r} (known: {', '.join(CONFIG_KEYS)})")
        cfg[k] = v
    return cfg


def parse_n(text):
    """``"200"`` -> 200, ``"480x119"`` -> (480, 119)."""
    if text is None:
        return None
    if isinstance(text, (int, tuple)):
        return text
    parts = str(text).lower().split("x")
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"bad resolution {text!r}; use N or NXxNY") from None
    return vals[0] if len(vals) == 1 else vals


def output_root(arg=None) -> Path:
    return Path(arg or os.environ.get(OUTPUT_ENV) or "wenozr-output")


def _scheme(name, p=None, eps=None) -> SchemeSpec:
    try:
        return SchemeSpec.from_name(name, p=None if p is None else float(p),
                                    eps=None if eps is None else float(eps))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _float_list(text):
    return [float(s) for s in str(text).split(",") if s.strip()]


def _run_dir(root: Path, problem: str, scheme: SchemeSpec, n) -> Path:
    tag = "x".join(map(str, n)) if isinstance(n, tuple) else str(n)
    fam = scheme.family.value + (f"{scheme.p:g}" if scheme.family.value == "zr" else "")
    return root / f"{problem}_{fam}_N{tag}"


def cmd_run(args) -> int:
    cfg = read_config(args.config) if args.config else {}
    merged = {k: cfg.get(k) for k in CONFIG_KEYS}
    for k in CONFIG_KEYS:
        v = getattr(args, k, None)
        if v is not None:
            merged[k] = v
    if not merged["problem"]:
        raise UsageError("run needs a problem (--problem or config key 'problem')")
    try:
        problem = get_problem(merged["problem"])
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    scheme = _scheme(merged["scheme"] or "zr", merged["p"], merged["epsilon"])
    n = parse_n(merged["N"]) or problem.default_n
    root = output_root(merged["output"])
    out = _run_dir(root, problem.name, scheme, n)
    res = io.run_experiment(problem, scheme, n, out,
                            T=None if merged["T"] is None else float(merged["T"]),
                            dt_coefficient=None if merged["dt_coefficient"] is None
                            else float(merged["dt_coefficient"]))
    msg = f"{problem.name} {scheme.label} N={n}: {res.wall_time:.2f}s -> {out}"
    if res.norms:
        msg += f"  L1={res.norms['L1']:.4e} L2={res.norms['L2']:.4e} Linf={res.norms['Linf']:.4e}"
    print(msg)
    return EXIT_OK


def cmd_table(args) -> int:
    root = output_root(args.output)
    n_list = [int(v) for v in args.n_list.split(",")]
    reports = {}
    for name in args.schemes.split(","):
        scheme = _scheme(name)
        reports[scheme.label] = convergence_table("advection", scheme, n_list)
    for norm in ("L1", "L2", "Linf"):
        header = ["N"]
        for label in reports:
            header += [f"{label} error", f"{label} order"]
        rows = []
        for i, n in enumerate(n_list):
            row = [n]
            for rep in reports.values():
                o = rep[i].order(norm)
                row += [rep[i].error(norm), "" if o is None else o]
            rows.append(row)
        io.write_csv(root / f"convergence_{norm}.csv", header, rows)
        print(f"\n{norm} error and order")
        print("  N    " + "".join(f"{lab:>24s}" for lab in reports))
        for row in rows:
            cells = "".join(
                f"{row[1 + 2 * j]:>14.3e} {('--' if row[2 + 2 * j] == '' else format(row[2 + 2 * j], '.4f')):>9s}"
                for j in range(len(reports)))
            print(f"  {row[0]:<5d}{cells}")
    return EXIT_OK


def cmd_probe(args) -> int:
    root = output_root(args.output)
    eps = {}
    for item in args.eps or []:
        fam, _, val = item.partition("=")
        if not val:
            raise UsageError(f"--eps expects FAMILY=VALUE, got {item!r}")
        eps[fam.strip().lower()] = float(val)
    table = weight_probe(args.schemes.split(","), _float_list(args.p_list), PROBE_ABSCISSAE,
                         layout=args.layout, reading=args.reading, eps=eps)
    path = io.write_csv(root / "probe_weights.csv", table.header(), table.rows())
    print("scheme            k" + "".join(f"{x:>13.3f}" for x in table.abscissae))
    for row in table.rows():
        print(f"{row[0]:<16s} {row[1]:>2d}" + "".join(f" {v:>12.6g}" for v in row[2:]))
    # weight profiles across the jump
    specs = [SchemeSpec.from_name(s, eps=eps.get(s)) for s in args.schemes.split(",")]
    specs += [SchemeSpec.from_name("zr", p=p, eps=eps.get("zr")) for p in _float_list(args.p_list)]
    for spec in specs:
        x, w = weight_profile(spec, layout=args.layout)
        io.write_columns(root / f"probe_profile_{spec.label}.csv", {"x": x, "w0": w[0], "w1": w[1], "w2": w[2]})
    print(f"wrote {path}")
    return EXIT_OK


def cmd_suite(args) -> int:
    root = output_root(args.output)
    names = args.problems.split(",") if args.problems else list(REGISTRY)
    for name in names:
        try:
            problem = get_problem(name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        for s in args.schemes.split(","):
            scheme = _scheme(s)
            for n in (problem.resolutions if args.all_resolutions else (problem.default_n,)):
                out = _run_dir(root, name, scheme, n)
                res = io.run_experiment(problem, scheme, n, out)
                extra = f" L1={res.norms['L1']:.4e}" if res.norms else ""
                print(f"{name:<18s} {scheme.label:<14s} N={n}: {res.wall_time:8.2f}s{extra}")
    return EXIT_OK


def cmd_golden(args) -> int:
    report = io.compare_golden(args.run, args.golden, args.tol)
    for name, d in report.deviations.items():
        print(f"{name:<12s} max|diff| = {d:.3e}")
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wenozr", description="Fifth-order finite-difference WENO benchmarks.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run a single experiment")
    r.add_argument("--config", help="key=value file; flags take precedence")
    r.add_argument("--problem", choices=list(REGISTRY))
    r.add_argument("--scheme", help="linear, js, m, z or zr")
    r.add_argument("--p", help="exponent for Z/ZR weights")
    r.add_argument("--epsilon", help="regularization")
    r.add_argument("--N", "-n", dest="N", help="cells, or NXxNY in 2D")
    r.add_argument("--T", help="override the final time")
    r.add_argument("--dt-coefficient", dest="dt_coefficient", help="override the time-step coefficient")
    r.add_argument("--output", help=f"output root (default ${OUTPUT_ENV})")
    r.set_defaults(func=cmd_run)

    t = sub.add_parser("table", help="advection convergence tables")
    t.add_argument("--schemes", default=",".join(ALL_SCHEMES))
    t.add_argument("--n-list", default="10,20,40,80,160,320")
    t.add_argument("--output")
    t.set_defaults(func=cmd_table)

    p = sub.add_parser("probe", help="weights around a jump on the first step")
    p.add_argument("--schemes", default="js,m,z")
    p.add_argument("--p-list", default="1,3,6", help="ZR exponents to add")
    p.add_argument("--layout", choices=("interface", "cell"), default="interface")
    p.add_argument("--reading", choices=("stage1", "step"), default="stage1")
    p.add_argument("--eps", action="append", metavar="FAMILY=VALUE", help="per-family regularization")
    p.add_argument("--output")
    p.set_defaults(func=cmd_probe)

    s = sub.add_parser("suite", help="run every registered problem")
    s.add_argument("--problems", help="comma-separated subset")
    s.add_argument("--schemes", default=",".join(ALL_SCHEMES))
    s.add_argument("--all-resolutions", action="store_true")
    s.add_argument("--output")
    s.set_defaults(func=cmd_suite)

    g = sub.add_parser("golden", help="compare a CSV with a golden file")
    g.add_argument("run")
    g.add_argument("golden")
    g.add_argument("--tol", type=float, default=1e-12)
    g.set_defaults(func=cmd_golden)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, io.SchemaMismatch, FileNotFoundError, PermissionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
