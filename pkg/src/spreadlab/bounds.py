"""Quotient-matrix lower bounds on the distance and DSL spreads.

Each bound partitions the vertex set around a witness substructure (closed
neighbourhood of a max-degree vertex, maximum clique, diameter path or
longest cactus cycle), forms the 2x2 quotient of D(G) or Q(G), and reads the
spread bound off its characteristic polynomial. Coefficients a_i, b_i are
computed in exact integer arithmetic and converted to floating point only
for the square root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateBoundError, SpreadlabError
from .graph import Graph, all_pairs_distances, bipartition, check_connected
from .quotient import Partition, QuotientMatrix, quotient
from .spectral import (
    KIND_DISTANCE,
    KIND_DSL,
    closed_form_spread,
    distance_rows,
    dsl_rows,
    spread,
)
from .structures import (
    DIAMETER_PATH_CAP,
    cactus_longest_cycles,
    diameter_paths,
    maximum_cliques,
)

METHOD_BIPARTITE_DISTANCE = "bipartite_distance"
METHOD_BIPARTITE_DSL = "bipartite_dsl"
METHOD_CLIQUE = "clique"
METHOD_DIAMETER = "diameter"
METHOD_CACTUS = "cactus"
METHOD_LEGACY = "legacy_2012"


@dataclass(frozen=True)
class Witness:
    """One evaluated witness of a bound: its coefficients, its quotient and
    the quotient's eigenvalue pair."""

    label: str
    vertices: tuple[int, ...]
    a: int
    b: int
    s_or_t: Fraction
    quotient: QuotientMatrix
    lam1: float
    lam2: float
    bound_value: float


@dataclass(frozen=True)
class BoundReport:
    method: str
    parameter_name: str
    parameter: int
    witnesses: tuple[Witness, ...]
    bound: float
    radius_lb: float
    min_ub: float
    true_spread: float
    closed_form: bool = False
    witnesses_truncated: bool = False


def _finish(method, pname, param, witnesses, true_report, truncated=False):
    return BoundReport(
        method=method,
        parameter_name=pname,
        parameter=param,
        witnesses=tuple(witnesses),
        bound=max(w.bound_value for w in witnesses),
        radius_lb=max(w.lam1 for w in witnesses),
        min_ub=min(w.lam2 for w in witnesses),
        true_spread=true_report.spread,
        witnesses_truncated=truncated,
    )


def _closed(method, pname, param, value, true_report):
    return BoundReport(
        method=method,
        parameter_name=pname,
        parameter=param,
        witnesses=(),
        bound=value,
        radius_lb=true_report.rho_max,
        min_ub=true_report.rho_min,
        true_spread=true_report.spread,
        closed_form=True,
    )


def _sqrt_nonneg(disc: int, context: str) -> float:
    if disc < 0:
        raise SpreadlabError(f"negative discriminant {disc} in {context}; quotient has complex roots")
    return math.sqrt(disc)


# ---------------------------------------------------------------------------
# bipartite bounds (max-degree neighbourhood partition)


def _bipartite_bound(g: Graph, kind: str) -> BoundReport:
    check_connected(g)
    bipartition(g)
    n = g.n
    dd = all_pairs_distances(g)
    true_report = spread(g, kind)
    delta = g.max_degree()
    if n <= 1:
        return _closed(
            METHOD_BIPARTITE_DISTANCE if kind == KIND_DISTANCE else METHOD_BIPARTITE_DSL,
            "max_degree", delta, 0.0, true_report)
    if delta == n - 1:
        # bipartite with a universal vertex: the star; exact closed forms
        value = closed_form_spread("star_distance" if kind == KIND_DISTANCE else "deltamax_dsl", n)
        return _closed(
            METHOD_BIPARTITE_DISTANCE if kind == KIND_DISTANCE else METHOD_BIPARTITE_DSL,
            "max_degree", delta, value, true_report)

    S = sum(dd.trans)
    W = S // 2
    rows = distance_rows(g, dd) if kind == KIND_DISTANCE else dsl_rows(g, dd)
    denom = (1 + delta) * (n - delta - 1)
    witnesses = []
    for v in range(n):
        if g.degree(v) != delta:
            continue
        d_v = dd.trans[v]
        t_delta = sum(dd.trans[u] for u in g.adjacency[v])  # t_v * Delta, an integer
        if kind == KIND_DISTANCE:
            a = (delta + 1) * (S - 2 * d_v - 2 * t_delta) + 2 * n * delta * delta
            b = d_v * d_v - 2 * S * delta * delta + 2 * d_v * t_delta + t_delta * t_delta
        else:
            a = 4 * (W - d_v - t_delta) * (delta + 1) + 2 * n * delta * delta + n * d_v + n * t_delta
            b = (4 * d_v * d_v + 8 * d_v * t_delta + 4 * t_delta * t_delta
                 - 8 * W * delta * delta - 4 * W * d_v - 4 * W * t_delta)
        root = _sqrt_nonneg(a * a + 4 * b * denom, f"bipartite bound at vertex {v + 1}")
        part = Partition.around(sorted({v} | set(g.adjacency[v])), n)
        witnesses.append(Witness(
            label=f"v{v + 1}",
            vertices=(v,),
            a=a,
            b=b,
            s_or_t=Fraction(t_delta, delta),
            quotient=quotient(rows, part),
            lam1=(a + root) / (2 * denom),
            lam2=(a - root) / (2 * denom),
            bound_value=root / denom,
        ))
    method = METHOD_BIPARTITE_DISTANCE if kind == KIND_DISTANCE else METHOD_BIPARTITE_DSL
    return _finish(method, "max_degree", delta, witnesses, true_report)


def bound_bipartite_distance(g: Graph) -> BoundReport:
    """Distance-spread lower bound from the closed neighbourhood of each
    maximum-degree vertex of a connected bipartite graph."""
    return _bipartite_bound(g, KIND_DISTANCE)


def bound_bipartite_dsl(g: Graph) -> BoundReport:
    """DSL-spread analogue of bound_bipartite_distance (Wiener-index form)."""
    return _bipartite_bound(g, KIND_DSL)


# ---------------------------------------------------------------------------
# clique bound


def bound_clique(g: Graph) -> BoundReport:
    """DSL-spread lower bound indexed by the maximum cliques."""
    check_connected(g)
    n = g.n
    dd = all_pairs_distances(g)
    true_report = spread(g, KIND_DSL)
    cliques = maximum_cliques(g, dd)
    omega = cliques.parameter
    if omega < 2:
        raise SpreadlabError(f"clique bound needs omega >= 2, got omega={omega}")
    if omega == n:
        return _closed(METHOD_CLIQUE, "clique_number", omega,
                       closed_form_spread("complete_dsl", n), true_report)
    W = dd.wiener
    rows = dsl_rows(g, dd)
    denom = (n - omega) * omega
    witnesses = []
    for member, s in zip(cliques.members, cliques.s_values):
        a = n * omega * (1 - omega) + 4 * omega * (s - W) - n * s
        b = 4 * W * omega * (omega - 1) + 4 * s * (W - s)
        root = _sqrt_nonneg(a * a - 4 * b * denom, f"clique bound at {member}")
        witnesses.append(Witness(
            label="{" + ",".join(f"v{v + 1}" for v in member) + "}",
            vertices=member,
            a=a,
            b=b,
            s_or_t=Fraction(s),
            quotient=quotient(rows, Partition.around(member, n)),
            lam1=(-a + root) / (2 * denom),
            lam2=(-a - root) / (2 * denom),
            bound_value=root / denom,
        ))
    return _finish(METHOD_CLIQUE, "clique_number", omega, witnesses, true_report)


# ---------------------------------------------------------------------------
# diameter bound


def bound_diameter(g: Graph, cap: int = DIAMETER_PATH_CAP) -> BoundReport:
    """DSL-spread lower bound indexed by the diameter paths."""
    check_connected(g)
    n = g.n
    dd = all_pairs_distances(g)
    true_report = spread(g, KIND_DSL)
    d = dd.diameter
    if d == 1:
        return _closed(METHOD_DIAMETER, "diameter", d,
                       closed_form_spread("complete_dsl", n), true_report)
    if d == n - 1:
        raise DegenerateBoundError(
            f"diameter {d} = n-1: the partition around a diameter path has an empty second block")
    paths = diameter_paths(g, dd, cap=cap)
    W = dd.wiener
    rows = dsl_rows(g, dd)
    denom = (d + 1) * (n - 1 - d)
    witnesses = []
    for member, s in zip(paths.members, paths.s_values):
        a = 12 * (1 + d) * (s - W) - n * d * (d + 1) * (d + 2) - 3 * n * s
        b = 4 * d * (d + 1) * (d + 2) * W + 12 * s * (W - s)
        root = _sqrt_nonneg(a * a - 12 * b * denom, f"diameter bound at {member}")
        witnesses.append(Witness(
            label="-".join(f"v{v + 1}" for v in member),
            vertices=member,
            a=a,
            b=b,
            s_or_t=Fraction(s),
            quotient=quotient(rows, Partition.around(member, n)),
            lam1=(-a + root) / (6 * denom),
            lam2=(-a - root) / (6 * denom),
            bound_value=root / (3 * denom),
        ))
    return _finish(METHOD_DIAMETER, "diameter", d, witnesses, true_report,
                   truncated=paths.truncated)


# ---------------------------------------------------------------------------
# cactus bound


def bound_cactus(g: Graph) -> BoundReport:
    """DSL-spread lower bound for cacti, indexed by the longest cycles."""
    check_connected(g)
    n = g.n
    dd = all_pairs_distances(g)
    true_report = spread(g, KIND_DSL)
    cycles = cactus_longest_cycles(g, dd)
    l = cycles.parameter
    if l == n:
        raise DegenerateBoundError(
            f"circumference {l} = n: the partition around the cycle has an empty second block")
    W = dd.wiener
    rows = dsl_rows(g, dd)
    denom = l * (n - l)
    witnesses = []
    for member, s in zip(cycles.members, cycles.s_values):
        if l % 2 == 0:
            a = l ** 3 * n + 4 * n * s - 16 * l * (s - W)
            b = 4 * l ** 3 * W - 16 * s * (s - W)
        else:
            a = l ** 3 * n + 4 * n * s - l * n - 16 * l * (s - W)
            b = 4 * (l ** 3 - l) * W - 16 * s * (s - W)
        root = _sqrt_nonneg(a * a - 16 * b * denom, f"cactus bound at {member}")
        witnesses.append(Witness(
            label="(" + ",".join(f"v{v + 1}" for v in member) + ")",
            vertices=member,
            a=a,
            b=b,
            s_or_t=Fraction(s),
            quotient=quotient(rows, Partition.around(member, n)),
            lam1=(a + root) / (8 * denom),
            lam2=(a - root) / (8 * denom),
            bound_value=root / (4 * denom),
        ))
    return _finish(METHOD_CACTUS, "circumference", l, witnesses, true_report)


# ---------------------------------------------------------------------------
# quarantined 2012 quotient formula and its refutation


@dataclass(frozen=True)
class LegacyComparison:
    """The erroneous published 2x2 quotient versus the true one, in exact
    rationals."""

    b1: tuple[tuple[Fraction, ...], ...]
    b2: QuotientMatrix
    equal: bool


def legacy_2012_counterexample(g: Graph, v: int) -> LegacyComparison:
    """Evaluate the incorrect published quotient formula B1 at a max-degree
    vertex and compare it with the true quotient B2 of D(G) in exact
    arithmetic. The two disagree on every valid input, which refutes the
    bound the formula supported. Never used by any other bound.
    """
    check_connected(g)
    bipartition(g)
    n = g.n
    delta = g.max_degree()
    if g.degree(v) != delta:
        raise SpreadlabError(f"vertex {v + 1} has degree {g.degree(v)}, not the maximum degree {delta}")
    if delta > n - 2:
        raise SpreadlabError(f"legacy formula needs max degree <= n-2, got {delta} with n={n}")
    dd = all_pairs_distances(g)
    S = sum(dd.trans)
    t_delta = sum(dd.trans[u] for u in g.adjacency[v])  # t_v * Delta
    b1 = (
        (Fraction(2 * delta * delta, delta + 1),
         Fraction(t_delta + delta - 2 * delta * delta, delta + 1)),
        (Fraction(t_delta + delta - 2 * delta * delta, n - delta - 1),
         Fraction(S - 2 * t_delta + 2 * delta * (delta - 1), n - delta - 1)),
    )
    part = Partition.around(sorted({v} | set(g.adjacency[v])), n)
    b2 = quotient(distance_rows(g, dd), part)
    return LegacyComparison(b1=b1, b2=b2, equal=(b1 == b2.entries))
