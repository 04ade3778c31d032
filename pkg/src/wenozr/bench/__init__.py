"""Benchmark problems, error norms, the weight probe and the CLI harness."""

from wenozr.bench.norms import ErrorReport, convergence_table, error_norms
from wenozr.bench.probe import PROBE_ABSCISSAE, ProbeTable, weight_probe
from wenozr.bench.problems import REGISTRY, ProblemSpec, ReferenceKind, get_problem

__all__ = [
    "ErrorReport",
    "convergence_table",
    "error_norms",
    "PROBE_ABSCISSAE",
    "ProbeTable",
    "weight_probe",
    "REGISTRY",
    "ProblemSpec",
    "ReferenceKind",
    "get_problem",
]
