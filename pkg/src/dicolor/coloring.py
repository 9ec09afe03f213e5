"""Exact coloring invariants for graphs and digraphs.

Integer invariants use a minimum-cover recursion over subsets whose parts
are maximal admissible sets (independent for graphs, acyclic for
digraphs) containing the lowest uncovered vertex.  Fractional invariants
solve the covering linear program in exact rational arithmetic; a single
simplex run yields both an optimal cover and an optimal dual weighting
with identical objectives, which is the strong-duality certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, DicolorError, InputError
from .families import COLUMN_CAP, maximal_acyclic_sets, maximal_independent_sets
from .graphs import (
    Digraph,
    Graph,
    derive_rng,
    is_forest,
    iter_bits,
    orientations,
    random_orientation,
)
from .simplex import simplex_max

DP_VERTEX_BUDGET = 24
LP_VERTEX_BUDGET = 20
ORIENT_EDGE_BUDGET = 20

_INF = float("inf")


@dataclass(frozen=True)
class CoverSolution:
    """Fractional cover: weighted admissible sets covering every vertex."""

    parts: tuple[tuple[int, Fraction], ...]
    objective: Fraction

    def coverage(self, v: int) -> Fraction:
        return sum((w for mask, w in self.parts if (mask >> v) & 1), Fraction(0))


@dataclass(frozen=True)
class CliqueWeighting:
    """Vertex weighting with weight at most 1 on every admissible set."""

    values: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def of(self, mask: int) -> Fraction:
        return sum((self.values[v] for v in iter_bits(mask)), Fraction(0))


def _min_cover(full: int, parts_for) -> int:
    """Minimum number of admissible parts covering ``full``.

    ``parts_for(S, v)`` must yield the maximal admissible subsets of ``S``
    containing vertex ``v``; correctness only needs every admissible set to
    be contained in a maximal one.
    """
    memo: dict[int, int] = {}

    def rec(S: int) -> int:
        if not S:
            return 0
        cached = memo.get(S)
        if cached is not None:
            return cached
        v = (S & -S).bit_length() - 1
        best = _INF
        for M in parts_for(S, v):
            if M == S:
                best = 1
                break
            sub = rec(S & ~M) + 1
            if sub < best:
                best = sub
        memo[S] = best
        return best

    return rec(full)


def chromatic_number(G: Graph, vertex_budget: int = DP_VERTEX_BUDGET) -> int:
    """Exact chromatic number: minimum independent sets covering V."""
    if G.n > vertex_budget:
        raise BudgetExceededError("chromatic-number DP", G.n, vertex_budget)
    if G.n == 0:
        return 0
    return _min_cover(
        G.full_mask, lambda S, v: maximal_independent_sets(G, within=S, containing=v)
    )


def digraph_chromatic_number(D: Digraph, vertex_budget: int = DP_VERTEX_BUDGET) -> int:
    """Exact chromatic number of a digraph: minimum acyclic cover of V."""
    n = D.graph.n
    if n > vertex_budget:
        raise BudgetExceededError("digraph-chromatic DP", n, vertex_budget)
    if n == 0:
        return 0
    return _min_cover(
        D.graph.full_mask, lambda S, v: maximal_acyclic_sets(D, within=S, containing=v)
    )


def dichromatic_number_exact(
    G: Graph,
    edge_budget: int = ORIENT_EDGE_BUDGET,
    vertex_budget: int = DP_VERTEX_BUDGET,
) -> tuple[int, Digraph]:
    """Exact dichromatic number with a maximizing orientation.

    Every orientation of a forest is acyclic, so forests short-circuit to
    1.  Otherwise all 2^e orientations are enumerated as binary counters;
    raise the budget or fall back to :func:`dichromatic_lower_bound_mc`
    beyond ``edge_budget`` edges.
    """
    if G.n == 0:
        return 0, Digraph(G, 0)
    if is_forest(G):
        return 1, Digraph(G, 0)
    m = len(G.edges)
    if m > edge_budget:
        raise BudgetExceededError(
            "orientation enumeration (use dichromatic_lower_bound_mc)", 2**m, 2**edge_budget
        )
    best = 0
    witness = None
    for D in orientations(G):
        c = digraph_chromatic_number(D, vertex_budget)
        if c > best:
            best = c
            witness = D
    return best, witness


def dichromatic_lower_bound_mc(
    G: Graph,
    trials: int,
    seed: int = 0,
    vertex_budget: int = DP_VERTEX_BUDGET,
) -> tuple[int, Digraph]:
    """Best digraph chromatic number over sampled orientations.

    The result is a certified lower bound on the dichromatic number.  If
    2^e <= trials the search is exhaustive and the bound is exact.
    """
    if trials < 1:
        raise InputError("need at least one trial")
    if G.n > vertex_budget:
        raise BudgetExceededError("digraph-chromatic DP", G.n, vertex_budget)
    if G.n == 0:
        return 0, Digraph(G, 0)
    if is_forest(G):
        return 1, Digraph(G, 0)
    m = len(G.edges)
    if (1 << m) <= trials:
        return dichromatic_number_exact(G, edge_budget=m, vertex_budget=vertex_budget)
    best = 0
    witness = None
    for i in range(trials):
        D = random_orientation(G, derive_rng(seed, i))
        c = digraph_chromatic_number(D, vertex_budget)
        if c > best:
            best = c
            witness = D
    return best, witness


def _solve_cover_lp(
    n: int, columns: list[int]
) -> tuple[Fraction, CoverSolution, CliqueWeighting]:
    """Covering LP over the given column sets, solved through its dual.

    Variables of the simplex call are the vertex weights (the packing
    side); the cover weights fall out as the duals of the packing rows.
    """
    covered = 0
    for col in columns:
        covered |= col
    if covered != (1 << n) - 1:
        raise DicolorError("columns do not cover every vertex")
    c = [Fraction(1)] * n
    A = [[Fraction(1) if (col >> v) & 1 else Fraction(0) for v in range(n)] for col in columns]
    b = [Fraction(1)] * len(columns)
    value, w, y = simplex_max(c, A, b)
    cover = CoverSolution(
        parts=tuple((col, yv) for col, yv in zip(columns, y) if yv > 0), objective=value
    )
    weighting = CliqueWeighting(values=tuple(w))
    _check_certificate(n, columns, cover, weighting, value)
    return value, cover, weighting


def _check_certificate(
    n: int,
    columns: list[int],
    cover: CoverSolution,
    weighting: CliqueWeighting,
    value: Fraction,
) -> None:
    # exact feasibility of both sides plus equal objectives; any failure
    # here is an internal solver bug, never a property of the input
    for v in range(n):
        if cover.coverage(v) < 1:
            raise DicolorError(f"cover certificate violates coverage at vertex {v}")
    if sum((wgt for _, wgt in cover.parts), Fraction(0)) != value:
        raise DicolorError("cover objective mismatch")
    for col in columns:
        if weighting.of(col) > 1:
            raise DicolorError("dual weighting exceeds 1 on an admissible set")
    if weighting.total != value:
        raise DicolorError("dual objective mismatch")


def fractional_chromatic_with_dual(
    G: Graph, vertex_budget: int = LP_VERTEX_BUDGET
) -> tuple[Fraction, CoverSolution, CliqueWeighting]:
    """Exact fractional chromatic number with primal and dual certificates."""
    if G.n > vertex_budget:
        raise BudgetExceededError("fractional-chromatic LP", G.n, vertex_budget)
    if G.n == 0:
        return Fraction(0), CoverSolution((), Fraction(0)), CliqueWeighting(())
    columns = list(maximal_independent_sets(G))
    return _solve_cover_lp(G.n, columns)


def digraph_fractional_chromatic(
    D: Digraph, vertex_budget: int = LP_VERTEX_BUDGET, column_cap: int = COLUMN_CAP
) -> Fraction:
    """Exact fractional chromatic number of a digraph (acyclic columns)."""
    n = D.graph.n
    if n > vertex_budget:
        raise BudgetExceededError("digraph fractional LP", n, vertex_budget)
    if n == 0:
        return Fraction(0)
    columns = maximal_acyclic_sets(D, cap=column_cap)
    value, _, _ = _solve_cover_lp(n, columns)
    return value


def fractional_dichromatic(
    G: Graph,
    mode: str = "exact",
    trials: int | None = None,
    seed: int = 0,
    edge_budget: int = ORIENT_EDGE_BUDGET,
    vertex_budget: int = LP_VERTEX_BUDGET,
) -> Fraction:
    """Fractional dichromatic number.

    ``exact`` maximizes over all orientations (edge budget applies);
    ``sampled`` maximizes over ``trials`` random orientations and returns a
    certified lower bound.
    """
    if G.n == 0:
        return Fraction(0)
    if is_forest(G):
        return Fraction(1)
    m = len(G.edges)
    if mode == "exact":
        if m > edge_budget:
            raise BudgetExceededError("orientation enumeration", 2**m, 2**edge_budget)
        digs = orientations(G)
    elif mode == "sampled":
        if not trials or trials < 1:
            raise InputError("sampled mode needs trials >= 1")
        digs = (random_orientation(G, derive_rng(seed, i)) for i in range(trials))
    else:
        raise InputError(f"unknown mode {mode!r}")
    best = Fraction(0)
    for D in digs:
        val = digraph_fractional_chromatic(D, vertex_budget)
        if val > best:
            best = val
    return best


def fractional_independence(
    G: Graph, vertex_budget: int = LP_VERTEX_BUDGET
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact fractional independence number with a minimizing weighting.

    Minimizes the largest independent-set weight over weightings of total
    n.  Rescaling an optimal clique weighting w* (total t, w*(I) <= 1) by
    n/t is optimal for this program, so the value is exactly n/t.
    """
    n = G.n
    if n == 0:
        return Fraction(0), ()
    t, _, weighting = fractional_chromatic_with_dual(G, vertex_budget)
    scale = Fraction(n) / t
    return scale, tuple(wv * scale for wv in weighting.values)
