"""Run artifacts: CSV tables, key=value metadata and golden-file comparison."""

from __future__ import annotations

import csv
import gzip
import logging
import math
import os
import subprocess
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from wenozr.bench.norms import error_norms, reference_primitive, solution_primitive
from wenozr.bench.problems import ProblemSpec, ReferenceKind, get_problem
from wenozr.evolve import advance
from wenozr.mesh import Grid2D
from wenozr.reference import highres_reference
from wenozr.weights import SchemeSpec

__all__ = [
    "SchemaMismatch",
    "write_csv",
    "read_csv",
    "write_metadata",
    "read_metadata",
    "git_describe",
    "GoldenReport",
    "compare_golden",
    "RunResult",
    "run_experiment",
]

logger = logging.getLogger(__name__)

_FMT = ".17g"


class SchemaMismatch(ValueError):
    """Two CSV files do not share the same columns or row count."""


def _open(path: Path, mode: str):
    # gzip transparently for golden files, which are large in 2D
    if path.suffix == ".gz":
        return gzip.open(path, mode + "t", newline="")
    return open(path, mode, newline="")


def write_csv(path, header: Sequence[str], rows) -> Path:
    """Write rows with full double precision (17 significant digits).

    A ``.gz`` suffix writes a gzip-compressed file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with _open(path, "w") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([format(v, _FMT) if isinstance(v, (float, np.floating)) else v for v in row])
    return path


def write_columns(path, columns: Mapping[str, np.ndarray]) -> Path:
    arrays = [np.asarray(c, dtype=float).ravel() for c in columns.values()]
    return write_csv(path, list(columns), zip(*arrays))


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    with _open(Path(path), "r") as fh:
        r = csv.reader(fh)
        header = next(r)
        return header, [row for row in r]


def write_metadata(path, meta: Mapping[str, object]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        for k, v in meta.items():
            fh.write(f"{k}={v}\n")
    return path


def read_metadata(path) -> dict[str, str]:
    out = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            k, _, v = line.partition("=")
            out[k.strip()] = v.strip()
    return out


def git_describe() -> str:
    here = Path(__file__).resolve().parent
    try:
        res = subprocess.run(["git", "describe", "--always", "--dirty", "--tags"], cwd=here,
                             capture_output=True, text=True, timeout=10)
    except (OSError, subprocess.SubprocessError):
        return "unknown"
    return res.stdout.strip() or "unknown"


@dataclass
class GoldenReport:
    passed: bool
    deviations: dict[str, float]
    failures: list[str] = field(default_factory=list)

    def summary(self) -> str:
        worst = max(self.deviations.values(), default=0.0)
        state = "pass" if self.passed else "FAIL (" + ", ".join(self.failures) + ")"
        return f"golden {state}; max deviation {worst:.3g}"


def _as_float(s: str) -> float | None:
    try:
        return float(s)
    except ValueError:
        return None


def compare_golden(run_csv, golden_csv, tolerance: float | Mapping[str, float] = 1e-12) -> GoldenReport:
    """Column-wise maximum absolute deviation of a run against a golden file.

    ``tolerance`` is a single bound or a per-column mapping (missing
    columns default to 0). Non-numeric cells must match exactly.
    """
    h1, r1 = read_csv(run_csv)
    h2, r2 = read_csv(golden_csv)
    if h1 != h2:
        raise SchemaMismatch(f"columns differ: {h1} vs {h2}")
    if len(r1) != len(r2):
        raise SchemaMismatch(f"row counts differ: {len(r1)} vs {len(r2)}")
    dev = {name: 0.0 for name in h1}
    for a, b in zip(r1, r2):
        for name, x, y in zip(h1, a, b):
            fx, fy = _as_float(x), _as_float(y)
            if fx is None or fy is None:
                d = 0.0 if x == y else math.inf
            elif math.isnan(fx) or math.isnan(fy):
                d = 0.0 if math.isnan(fx) and math.isnan(fy) else math.inf
            else:
                d = abs(fx - fy)
            if d > dev[name]:
                dev[name] = d
    tol = tolerance if isinstance(tolerance, Mapping) else {name: tolerance for name in h1}
    failures = [name for name in h1 if dev[name] > tol.get(name, 0.0)]
    return GoldenReport(not failures, dev, failures)


@dataclass
class RunResult:
    problem: ProblemSpec
    scheme: SchemeSpec
    grid: object
    u: np.ndarray
    wall_time: float
    files: dict[str, Path] = field(default_factory=dict)
    norms: dict[str, float] | None = None


_PRIM_NAMES = {1: ("u",), 3: ("rho", "u", "P"), 4: ("rho", "u", "v", "P")}


def _slug(scheme: SchemeSpec) -> str:
    s = scheme.family.value
    return f"{s}{scheme.p:g}" if s == "zr" else s


def run_experiment(problem: ProblemSpec | str, scheme: SchemeSpec, n=None, output_dir=None,
                   T: float | None = None, dt_coefficient: float | None = None,
                   crop: tuple | None = None, observers=()) -> RunResult:
    """Run one problem and (optionally) write its artifacts.

    Files written to ``output_dir``: ``solution.csv`` (primitive variables,
    plus ``*_ref`` columns where a reference exists), ``reference.csv``
    (a finely sampled reference curve), ``norms.txt`` and ``metadata.txt``.
    2D double Mach output is cropped to ``x <= 3`` unless ``crop`` says
    otherwise. ``observers`` are handed to :func:`advance` unchanged.
    """
    if isinstance(problem, str):
        problem = get_problem(problem)
    problem = problem.with_overrides(T=T, dt_coefficient=dt_coefficient)
    if output_dir is not None:
        output_dir = Path(output_dir)
        try:
            output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise OSError(f"cannot create output directory {output_dir}: {exc}") from exc
        if not os.access(output_dir, os.W_OK):
            raise PermissionError(f"output directory {output_dir} is not writable")
    t0 = time.perf_counter()
    grid, u = advance(problem, scheme, observers=observers, n=n)
    wall = time.perf_counter() - t0
    result = RunResult(problem, scheme, grid, u, wall)
    prim = solution_primitive(problem, u)
    names = _PRIM_NAMES[prim.shape[0]]

    if isinstance(grid, Grid2D):
        X, Y = grid.mesh()
        if crop is None and problem.name == "dmr":
            crop = (3.0, None)
        keep = np.ones_like(X, dtype=bool)
        if crop is not None:
            xmax, ymax = crop
            if xmax is not None:
                keep &= X <= xmax + 1e-12
            if ymax is not None:
                keep &= Y <= ymax + 1e-12
        cols = {"x": X[keep], "y": Y[keep]}
        cols.update({nm: prim[c][keep] for c, nm in enumerate(names)})
    else:
        ref = reference_primitive(problem, grid.x)
        cols = {"x": grid.x}
        cols.update({nm: prim[c] for c, nm in enumerate(names)})
        if ref is not None:
            cols.update({nm + "_ref": ref[c] for c, nm in enumerate(names)})
            L1, L2, Li = error_norms(prim[0], ref[0])
            result.norms = {"variable": names[0], "L1": L1, "L2": L2, "Linf": Li}

    if output_dir is None:
        return result
    files = result.files
    files["solution"] = write_columns(output_dir / "solution.csv", cols)
    if problem.ndim == 1 and problem.reference is not ReferenceKind.NONE:
        if problem.reference is ReferenceKind.HIGHRES_M2000:
            hr = highres_reference(problem)
            xr, wr = hr.x, problem.model.cons_to_prim(hr.field)
        else:
            (a, b), = problem.domain
            xr = np.linspace(a, b, 2001)
            wr = reference_primitive(problem, xr)
        rc = {"x": xr}
        rc.update({nm: wr[c] for c, nm in enumerate(names)})
        files["reference"] = write_columns(output_dir / "reference.csv", rc)
    if result.norms is not None:
        files["norms"] = write_metadata(output_dir / "norms.txt", {
            k: (format(v, _FMT) if isinstance(v, float) else v) for k, v in result.norms.items()})
    if isinstance(grid, Grid2D):
        shape = f"{grid.xaxis.n_points}x{grid.yaxis.n_points}"
    else:
        shape = grid.n_points
    n_used = problem.default_n if n is None else n
    files["metadata"] = write_metadata(output_dir / "metadata.txt", {
        "problem": problem.name,
        "scheme": scheme.label,
        "family": scheme.family.value,
        "p": format(scheme.p, "g"),
        "eps": format(scheme.eps, "g"),
        "N": "x".join(str(v) for v in n_used) if isinstance(n_used, tuple) else n_used,
        "points": shape,
        "T": format(problem.T, "g"),
        "dt_rule": str(problem.dt_rule),
        "dt": format(problem.dt_rule.dt(grid), _FMT),
        "wall_time_s": f"{wall:.3f}",
        "git_describe": git_describe(),
    })
    logger.info("%s %s finished in %.2fs -> %s", problem.name, scheme.label, wall, output_dir)
    return result
