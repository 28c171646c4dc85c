"""Equipartitions of masses by affine hyperplanes.

Thin wrappers around the compiled ``_core`` module. Exact rationals are
returned as ``fractions.Fraction``; point clouds may be given as nested
sequences or NumPy arrays of shape (n, d).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from . import _core
from ._core import (
    CertificateError,
    DimensionError,
    InconsistentBoundsError,
    ScalarKindError,
    binom_mod2,
    kummer_carries,
    mani_upper,
    ramos_lower,
    render_table,
)

__all__ = [
    "CertificateError",
    "DimensionError",
    "InconsistentBoundsError",
    "ScalarKindError",
    "binom_mod2",
    "bounds_for",
    "certify_upper_bound",
    "decide_ramos_two",
    "dickson_permutation_sum",
    "dickson_top",
    "enumerate_standard",
    "eval_test_map",
    "kummer_carries",
    "mani_upper",
    "ramos_lower",
    "render_table",
    "run_cli",
    "solve",
    "verify_certificate",
]

__version__ = "0.1.0"


def _fractions(rows: list[list[str]]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def bounds_for(j: int, k: int) -> dict[str, Any]:
    """Propagated bounds record for one cell (j, k)."""
    return json.loads(_core.bounds_for_json(j, k))


def dickson_top(k: int) -> list[tuple[int, ...]]:
    """Monomials of the product of all nonzero linear forms over F2, as exponent tuples."""
    return [tuple(m) for m in json.loads(_core.dickson_top_json(k))]


def dickson_permutation_sum(k: int) -> list[tuple[int, ...]]:
    return [tuple(m) for m in json.loads(_core.dickson_permutation_sum_json(k))]


def certify_upper_bound(j: int, k: int) -> dict[str, Any]:
    """Smallest d certified by the F2 index criterion, with its witness monomial."""
    return json.loads(_core.certify_json(j, k))


def enumerate_standard(j: int) -> list[dict[str, Any]]:
    """Exactly verified equipartition certificates of the standard moment-curve configuration."""
    return json.loads(_core.enumerate_json(j))


def verify_certificate(certificate: dict[str, Any]) -> list[list[Fraction]]:
    """Recomputes the orthant table exactly; raises CertificateError on failure."""
    return _fractions(json.loads(_core.verify_json(json.dumps(certificate))))


def decide_ramos_two(j: int) -> dict[str, Any]:
    return json.loads(_core.decide_json(j))


def _mass_document(masses: Sequence[Any]) -> str:
    clouds = []
    dim = None
    for cloud in masses:
        points = [[float(x) for x in p] for p in cloud]
        if not points:
            raise ValueError("empty point cloud")
        if dim is None:
            dim = len(points[0])
        n = len(points)
        weights = [1.0 / n] * n
        weights[-1] = 1.0 - (n - 1) / n
        clouds.append({"type": "points", "points": points, "weights": weights})
    if dim is None:
        raise ValueError("no masses")
    return json.dumps({"dimension": dim, "masses": clouds})


def solve(
    masses: Sequence[Any],
    k: int,
    *,
    eps: float = 0.02,
    seed: int = 0,
    restarts: int = 16,
    max_iters: int = 6000,
    time_budget: float = 120.0,
    threads: int = 0,
) -> dict[str, Any]:
    """Numerical search for k hyperplanes equiparting equally weighted point clouds.

    ``status == "NotFound"`` only means the search budget ran out.
    """
    return json.loads(
        _core.solve_json(_mass_document(masses), k, eps, seed, restarts, max_iters, time_budget, threads)
    )


def eval_test_map(masses: Sequence[Any], hyperplanes: Sequence[tuple[Sequence[float], float]]) -> list[list[float]]:
    """Per mass, mu(O_alpha) - 2^-k over labels in lexicographic order."""
    arrangement = {"hyperplanes": [{"normal": [float(v) for v in n], "offset": float(a)} for n, a in hyperplanes]}
    return json.loads(_core.test_map_json(_mass_document(masses), json.dumps(arrangement)))


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Runs the command-line interface in-process: (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))
