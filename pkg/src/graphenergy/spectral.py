"""Dense symmetric eigendecomposition and graph-spectrum quantities.

The eigensolver is a cyclic Jacobi iteration written here rather than taken
from a library: it is simple, unconditionally stable for symmetric input,
and accurate on the heavily degenerate spectra of the graph families this
package studies. Closed-form spectra for those families, graph energy, the
spectral radius, and the invariant-checking suites live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from .graphcore import (
    Graph,
    check_paley_parameter,
    complete,
    cycle,
    empty,
    paley,
    paley_primes,
    random_graph,
    ring_of_cliques,
    splitmix64,
)

__all__ = [
    "ConvergenceError",
    "EnergyReport",
    "SuiteResult",
    "closed_forms_suite",
    "eigenvalues",
    "energy",
    "jacobi_eigenvalues",
    "paley_spectrum_closed",
    "ring_clique_spectrum_closed",
    "spectral_radius",
    "trace_suite",
]


class ConvergenceError(RuntimeError):
    """The Jacobi iteration did not reach its tolerance within the sweep cap."""


def _off_norm(a: np.ndarray) -> float:
    # Summing off-diagonal squares directly avoids the catastrophic
    # cancellation of total - diagonal, whose error floor (eps * 2m) would
    # swamp a converged off-norm.
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return math.sqrt(float((off * off).sum()))


def _jacobi_sweep(a: np.ndarray, skip: float) -> None:
    """One cyclic sweep of Givens rotations, in place.

    Entries with |a_pq| < skip are left alone. Updates use the correction
    form x - s*(y + half*x) rather than the direct c*x - s*y: for tiny
    angles c rounds to 1.0 and the direct form stops contracting the
    off-diagonal mass.
    """
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if abs(apq) < skip:
                continue
            app = a[p, p]
            aqq = a[q, q]
            tau = (aqq - app) / (2.0 * apq)
            if tau >= 0.0:
                t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
            else:
                t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            half = s / (1.0 + c)  # tan of half the rotation angle
            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            new_p = col_p - s * (col_q + half * col_p)
            new_q = col_q + s * (col_p - half * col_q)
            a[:, p] = new_p
            a[p, :] = new_p
            a[:, q] = new_q
            a[q, :] = new_q
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0


def jacobi_eigenvalues(
    matrix, *, max_sweeps: int = tol.JACOBI_MAX_SWEEPS
) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, sorted descending.

    Threshold-cyclic Jacobi on a private float64 copy: each sweep visits
    every index pair but rotates only entries at or above off(A)/n, where
    off(A) is the off-diagonal Frobenius norm at the start of the sweep.
    The threshold tightens as the iteration converges; without it, sweeps
    spend most rotations stirring below-average entries of exactly
    degenerate spectra and the tail converges impractically slowly.

    Converged once off(A) < JACOBI_OFF_TOL_PER_N * n. Raises
    ConvergenceError if that does not happen within max_sweeps sweeps --
    a partial result is never returned.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.float64)
    threshold = tol.JACOBI_OFF_TOL_PER_N * n
    for _ in range(max_sweeps):
        off = _off_norm(a)
        if off < threshold:
            break
        _jacobi_sweep(a, max(off / n, tol.JACOBI_ROTATION_SKIP))
    else:
        final = _off_norm(a)
        if final >= threshold:
            raise ConvergenceError(
                f"off-diagonal norm {final:.3e} still above {threshold:.3e} "
                f"after {max_sweeps} sweeps (n={n})"
            )
    return np.sort(np.diagonal(a))[::-1].copy()


def eigenvalues(g: Graph) -> np.ndarray:
    """Adjacency spectrum of g, sorted descending."""
    if g.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    return jacobi_eigenvalues(g.adjacency)


def energy(g: Graph) -> float:
    """Graph energy: the sum of absolute adjacency eigenvalues."""
    return float(np.abs(eigenvalues(g)).sum())


def spectral_radius(g: Graph) -> float:
    """Largest adjacency eigenvalue; equals k for a k-regular graph."""
    return float(eigenvalues(g)[0])


def paley_spectrum_closed(p) -> np.ndarray:
    """Closed-form Paley spectrum, sorted descending.

    (p-1)/2 once, and (-1 +- sqrt(p))/2 each with multiplicity (p-1)/2.
    """
    value = check_paley_parameter(p)
    half = (value - 1) // 2
    root = math.sqrt(value)
    vals = np.concatenate(
        [
            [float(half)],
            np.full(half, (-1.0 + root) / 2.0),
            np.full(half, (-1.0 - root) / 2.0),
        ]
    )
    return np.sort(vals)[::-1].copy()


def ring_clique_spectrum_closed(q: int) -> np.ndarray:
    """Closed-form ring-of-cliques spectrum, sorted descending.

    The graph is the Cartesian product of the cycle C_q and the clique K_q,
    so its eigenvalues are all pairwise sums: 2cos(2 pi r / q) + (q - 1)
    once per r, and 2cos(2 pi r / q) - 1 with multiplicity q - 1 per r.
    The identification is validated against the eigensolver by
    closed_forms_suite and the test suite before anything relies on it.
    """
    if q <= 2:
        raise ValueError(f"ring of cliques needs q >= 3, got {q}")
    ring = 2.0 * np.cos(2.0 * np.pi * np.arange(q) / q)
    vals = np.concatenate([ring + (q - 1.0), np.repeat(ring - 1.0, q - 1)])
    return np.sort(vals)[::-1].copy()


@dataclass(frozen=True)
class EnergyReport:
    """Energy summary for one graph; e0 and ratio are set for regular k >= 1."""

    energy: float
    spectral_radius: float
    k: int | None = None
    e0: float | None = None
    ratio: float | None = None


class SuiteResult:
    """Pass/fail tally of one verification suite."""

    def __init__(self, name: str) -> None:
        self.name = name
        self.passed = 0
        self.failures: list[str] = []

    def check(self, ok: bool, case: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(case)

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __repr__(self) -> str:
        return f"SuiteResult({self.name}: {self.passed}/{self.total} pass)"


def _generated_corpus(trials: int, seed: int):
    """Family graphs with n <= 100 plus seeded random graphs, labeled."""
    for p in paley_primes(5, 97):
        yield f"paley({p})", paley(p)
    for q in range(3, 11):
        yield f"ring_of_cliques({q})", ring_of_cliques(q)
    for n in (1, 2, 3, 5, 10, 25):
        yield f"complete({n})", complete(n)
    for n in (3, 4, 5, 10, 25):
        yield f"cycle({n})", cycle(n)
    for n in (1, 4):
        yield f"empty({n})", empty(n)
    stream = splitmix64(seed)
    for t in range(trials):
        n = 1 + next(stream) % 12
        m = next(stream) % (n * (n - 1) // 2 + 1)
        s = next(stream)
        yield f"random_graph(n={n}, m={m}, seed={s})", random_graph(n, m, s)


def trace_suite(trials: int = 100, seed: int = 0) -> SuiteResult:
    """Check the two trace identities, sum(l) = 0 and sum(l^2) = 2m, over
    the generated corpus and `trials` seeded random graphs."""
    result = SuiteResult("trace")
    for label, g in _generated_corpus(trials, seed):
        vals = eigenvalues(g)
        trace = float(vals.sum())
        sumsq = float((vals * vals).sum())
        ok = abs(trace) <= tol.TRACE_TOL and abs(sumsq - 2 * g.m) <= tol.TRACE_SQ_TOL
        result.check(ok, f"{label}: sum(l)={trace:.3e}, sum(l^2)-2m={sumsq - 2 * g.m:.3e}")
    return result


def closed_forms_suite(paley_max: int = 200, ring_max: int = 12) -> SuiteResult:
    """Check the eigensolver against both closed-form spectra, entrywise."""
    result = SuiteResult("closed-forms")
    for p in paley_primes(5, paley_max):
        dev = float(np.abs(eigenvalues(paley(p)) - paley_spectrum_closed(p)).max())
        result.check(dev <= tol.CLOSED_SPECTRUM_TOL, f"paley({p}): max deviation {dev:.3e}")
    for q in range(3, ring_max + 1):
        dev = float(
            np.abs(eigenvalues(ring_of_cliques(q)) - ring_clique_spectrum_closed(q)).max()
        )
        result.check(
            dev <= tol.CLOSED_SPECTRUM_TOL, f"ring_of_cliques({q}): max deviation {dev:.3e}"
        )
    return result
