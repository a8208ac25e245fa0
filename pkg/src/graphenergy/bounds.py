"""Energy bounds and ratio machinery.

The regular-graph Koolen-Moulton bound e0, the edge-deletion inequality
check, closed-form family energies with their proof-chain inequalities,
ratio sweep tables, and the randomized/corpus verification suites.
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
    delete_edge,
    paley,
    paley_primes,
    random_graph,
    ring_of_cliques,
    splitmix64,
)
from .spectral import (
    EnergyReport,
    SuiteResult,
    eigenvalues,
    ring_clique_spectrum_closed,
)

__all__ = [
    "EdgeDeletionCheck",
    "RatioRow",
    "RatioUpperBounds",
    "bounds_suite",
    "e0",
    "edge_deletion_check",
    "energy_ratio",
    "lemma_suite",
    "paley_energy_closed",
    "paley_ratio_closed",
    "paley_ratio_lower",
    "ratio_row_for_graph",
    "ratio_table",
    "ring_clique_energy_closed",
    "ring_clique_energy_upper",
    "ring_clique_ratio_upper",
]


def e0(n: int, k: int) -> float:
    """Koolen-Moulton energy bound for k-regular graphs: k + sqrt(k(n-1)(n-k))."""
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    if k < 0 or k > n - 1:
        raise ValueError(f"regular degree must be in 0..{n - 1} for n={n}, got {k}")
    return k + math.sqrt(k * (n - 1) * (n - k))


def energy_ratio(g: Graph) -> EnergyReport:
    """Energy, spectral radius, e0, and the ratio energy/e0 for a regular graph.

    Rejects non-regular graphs and 0-regular graphs (e0 = 0 leaves the ratio
    undefined).
    """
    k = g.regularity()
    if k is None:
        raise ValueError("energy ratio needs a regular graph")
    if k == 0:
        raise ValueError("energy ratio is undefined for 0-regular graphs (e0 = 0)")
    vals = eigenvalues(g)
    en = float(np.abs(vals).sum())
    bound = e0(g.n, k)
    return EnergyReport(
        energy=en,
        spectral_radius=float(vals[0]),
        k=k,
        e0=bound,
        ratio=en / bound,
    )


@dataclass(frozen=True)
class EdgeDeletionCheck:
    """One instance of the edge-deletion inequality E(G) <= E(G - e) + 2."""

    lhs: float
    rhs: float
    holds: bool


def edge_deletion_check(g: Graph, e: tuple[int, int]) -> EdgeDeletionCheck:
    """Evaluate E(G) <= E(G - e) + 2 for an edge e of g."""
    reduced = delete_edge(g, e)
    lhs = float(np.abs(eigenvalues(g)).sum())
    rhs = float(np.abs(eigenvalues(reduced)).sum()) + 2.0
    return EdgeDeletionCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs + tol.BOUND_SLACK)


# ---------------------------------------------------------------------------
# closed forms and proof-chain values


def paley_energy_closed(p) -> float:
    """Exact Paley energy (p-1)(1 + sqrt(p))/2, from the closed-form spectrum."""
    value = check_paley_parameter(p)
    result = (value - 1) * (1.0 + math.sqrt(value)) / 2.0
    assert result > value**1.5 / 2.0, "closed-form energy fell below p^(3/2)/2"
    return result


def paley_ratio_lower(p) -> float:
    """Crude lower bound sqrt(p)/(sqrt(p) + 2) on the Paley energy ratio."""
    value = check_paley_parameter(p)
    root = math.sqrt(value)
    return root / (root + 2.0)


def paley_ratio_closed(p) -> float:
    """Exact Paley energy ratio (1 + sqrt(p)) / (1 + sqrt(p + 1)).

    For a Paley graph, e0 simplifies to (p-1)(1 + sqrt(p+1))/2, so the ratio
    collapses to this two-radical form; it lies strictly between the crude
    chain bound and 1.
    """
    value = check_paley_parameter(p)
    ratio = (1.0 + math.sqrt(value)) / (1.0 + math.sqrt(value + 1))
    assert paley_ratio_lower(value) < ratio < 1.0, "ratio left its proven bracket"
    return ratio


def ring_clique_energy_closed(q: int) -> float:
    """Ring-of-cliques energy summed from the closed-form product spectrum."""
    return float(np.abs(ring_clique_spectrum_closed(q)).sum())


def ring_clique_energy_upper(q: int) -> float:
    """Edge-deletion upper bound 4q^2 - 2q on the ring-of-cliques energy."""
    if q <= 2:
        raise ValueError(f"ring of cliques needs q >= 3, got {q}")
    return float(4 * q * q - 2 * q)


@dataclass(frozen=True)
class RatioUpperBounds:
    """Upper bounds on the ring-of-cliques energy ratio: exact-e0 and crude."""

    tight: float
    crude: float


def ring_clique_ratio_upper(q: int) -> RatioUpperBounds:
    """Both upper bounds on energy/e0 for the ring of cliques.

    tight divides the energy bound 4q^2 - 2q by the true e0(q^2, q+1); crude
    divides it by the smaller (q^2 - q - 1) sqrt(q + 1), so tight <= crude
    always. The crude value exceeds 1 for small q and decays toward 0 only
    asymptotically.
    """
    upper = ring_clique_energy_upper(q)
    tight = upper / e0(q * q, q + 1)
    crude = upper / ((q * q - q - 1) * math.sqrt(q + 1.0))
    assert tight <= crude, "e0 fell below its lower estimate"
    return RatioUpperBounds(tight=tight, crude=crude)


# ---------------------------------------------------------------------------
# ratio sweeps


@dataclass(frozen=True)
class RatioRow:
    """One row of a family ratio sweep."""

    family: str
    param: int
    n: int
    k: int
    m: int
    energy: float
    e0: float
    ratio: float
    closed_ratio: float | None = None
    paper_bound: float | None = None


def _paley_row(param: int, use_closed_form: bool) -> RatioRow:
    p = check_paley_parameter(param)
    n, k, m = p, (p - 1) // 2, p * (p - 1) // 4
    if use_closed_form:
        en = paley_energy_closed(p)
    else:
        en = float(np.abs(eigenvalues(paley(p))).sum())
    bound = e0(n, k)
    return RatioRow(
        family="paley",
        param=p,
        n=n,
        k=k,
        m=m,
        energy=en,
        e0=bound,
        ratio=en / bound,
        closed_ratio=paley_ratio_closed(p),
        paper_bound=paley_ratio_lower(p),
    )


def _ring_row(param: int, use_closed_form: bool) -> RatioRow:
    q = int(param)
    if q <= 2:
        raise ValueError(f"ring of cliques needs q >= 3, got {q}")
    n, k, m = q * q, q + 1, q * q * (q + 1) // 2
    if use_closed_form:
        en = ring_clique_energy_closed(q)
    else:
        en = float(np.abs(eigenvalues(ring_of_cliques(q))).sum())
    bound = e0(n, k)
    return RatioRow(
        family="ring_of_cliques",
        param=q,
        n=n,
        k=k,
        m=m,
        energy=en,
        e0=bound,
        ratio=en / bound,
        closed_ratio=ring_clique_energy_closed(q) / bound,
        paper_bound=ring_clique_ratio_upper(q).crude,
    )


def ratio_table(family: str, params, use_closed_form: bool = False) -> list[RatioRow]:
    """One RatioRow per parameter, in input order.

    family is "paley" or "ring_of_cliques". With use_closed_form the energy
    comes from the closed-form spectrum (cheap, any size); otherwise the
    graph is built and eigensolved. Any invalid parameter aborts the whole
    table with an error naming it.
    """
    builders = {"paley": _paley_row, "ring_of_cliques": _ring_row}
    if family not in builders:
        raise ValueError(f"family must be one of {sorted(builders)}, got {family!r}")
    rows = []
    for param in params:
        try:
            rows.append(builders[family](param, use_closed_form))
        except ValueError as exc:
            raise ValueError(f"invalid {family} parameter {param}: {exc}") from None
    return rows


def ratio_row_for_graph(g: Graph, param: int | None = None) -> RatioRow:
    """A custom-family row for any regular graph with k >= 1."""
    report = energy_ratio(g)
    return RatioRow(
        family="custom",
        param=g.n if param is None else int(param),
        n=g.n,
        k=report.k,
        m=g.m,
        energy=report.energy,
        e0=report.e0,
        ratio=report.ratio,
    )


# ---------------------------------------------------------------------------
# verification suites


def lemma_suite(trials: int, seed: int) -> SuiteResult:
    """Edge-deletion inequality on seeded random graphs (n <= 12).

    Each trial draws a graph, deletes one random edge, and checks both
    E(G) <= E(G - e) + 2 and the spectral-radius interlacing
    l1(G - e) <= l1(G).
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    result = SuiteResult("lemma")
    stream = splitmix64(seed)
    for trial in range(trials):
        n = 2 + next(stream) % 11
        m = 1 + next(stream) % (n * (n - 1) // 2)
        graph_seed = next(stream)
        g = random_graph(n, m, graph_seed)
        e = g.edges()[next(stream) % g.m]
        check = edge_deletion_check(g, e)
        radius_ok = (
            float(eigenvalues(delete_edge(g, e))[0])
            <= float(eigenvalues(g)[0]) + tol.BOUND_SLACK
        )
        result.check(
            check.holds and radius_ok,
            f"trial {trial}: graph(n={n}, m={m}, seed={graph_seed}), "
            f"edge={tuple(e)}, lhs={check.lhs!r}, rhs={check.rhs!r}",
        )
    return result


def _regular_corpus(paley_max: int, ring_max: int, complete_max: int, cycle_max: int):
    for p in paley_primes(5, paley_max):
        yield f"paley({p})", paley(p)
    for q in range(3, ring_max + 1):
        yield f"ring_of_cliques({q})", ring_of_cliques(q)
    for n in range(1, complete_max + 1):
        yield f"complete({n})", complete(n)
    for n in range(3, cycle_max + 1):
        yield f"cycle({n})", cycle(n)


def bounds_suite(
    paley_max: int = 200,
    ring_max: int = 12,
    complete_max: int = 50,
    cycle_max: int = 50,
) -> SuiteResult:
    """energy <= e0 over the regular corpus, with equality exactly for K_n."""
    result = SuiteResult("bounds")
    for label, g in _regular_corpus(paley_max, ring_max, complete_max, cycle_max):
        k = g.regularity()
        en = float(np.abs(eigenvalues(g)).sum())
        bound = e0(g.n, k)
        within = en <= bound + tol.BOUND_SLACK
        equality = abs(en - bound) <= tol.BOUND_SLACK
        result.check(
            within and equality == (k == g.n - 1),
            f"{label}: energy={en!r}, e0={bound!r}, k={k}, n={g.n}",
        )
    return result
