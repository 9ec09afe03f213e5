"""Enumeration of maximal independent and maximal acyclic vertex sets.

Independent sets are enumerated as maximal cliques of the complement via
Bron-Kerbosch with pivoting.  Acyclic sets of a digraph are hereditary but
not pairwise-defined, so they use an include/exclude expansion tree with a
maximality check at the leaves.
"""

from __future__ import annotations

from typing import Iterator

from .errors import BudgetExceededError, InputError
from .graphs import Digraph, Graph, is_acyclic, iter_bits

COLUMN_CAP = 1 << 20


def is_independent(G: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if G.adj[v] & mask:
            return False
    return True


def maximal_independent_sets(
    G: Graph, within: int | None = None, containing: int | None = None
) -> Iterator[int]:
    """Yield all maximal independent sets of G[within] as bit masks.

    With ``containing=v`` only the maximal sets through vertex ``v`` are
    produced.  Enumeration order is deterministic.
    """
    S = G.full_mask if within is None else within
    if S == 0:
        yield 0
        return
    # "compatible" = non-adjacent; maximal independent sets are the maximal
    # cliques of this relation
    compat = [~G.adj[v] & S & ~(1 << v) for v in range(G.n)]

    def bk(R: int, P: int, X: int) -> Iterator[int]:
        if not P and not X:
            yield R
            return
        pivot = -1
        best = -1
        for u in iter_bits(P | X):
            c = (P & compat[u]).bit_count()
            if c > best:
                best = c
                pivot = u
        for v in iter_bits(P & ~compat[pivot]):
            vm = 1 << v
            yield from bk(R | vm, P & compat[v], X & compat[v])
            P &= ~vm
            X |= vm

    if containing is None:
        yield from bk(0, S, 0)
    else:
        if not (S >> containing) & 1:
            raise InputError(f"anchor vertex {containing} is outside the ground set")
        yield from bk(1 << containing, compat[containing], 0)


def maximal_acyclic_sets(
    D: Digraph,
    within: int | None = None,
    containing: int | None = None,
    cap: int = COLUMN_CAP,
) -> list[int]:
    """All maximal acyclic vertex sets of D[within], as bit masks.

    ``cap`` bounds the number of sets produced; exceeding it raises
    :class:`BudgetExceededError` rather than silently truncating.
    """
    S = D.graph.full_mask if within is None else within
    if S == 0:
        return [0]
    out: list[int] = []

    def rec(A: int, cand: int, excl: int) -> None:
        # invariant: every vertex of cand individually extends A; excl may
        # hold stale non-extenders (staleness is monotone, so a final check
        # at the leaf suffices)
        if not cand:
            if all(not is_acyclic(D, A | (1 << v)) for v in iter_bits(excl)):
                if len(out) >= cap:
                    raise BudgetExceededError("maximal acyclic sets", len(out) + 1, cap)
                out.append(A)
            return
        low = cand & -cand
        u = low.bit_length() - 1
        with_u = A | low
        new_cand = 0
        for v in iter_bits(cand ^ low):
            if is_acyclic(D, with_u | (1 << v)):
                new_cand |= 1 << v
        new_excl = 0
        for v in iter_bits(excl):
            if is_acyclic(D, with_u | (1 << v)):
                new_excl |= 1 << v
        rec(with_u, new_cand, new_excl)
        rec(A, cand ^ low, excl | low)

    if containing is None:
        rec(0, S, 0)
    else:
        anchor = 1 << containing
        if not S & anchor:
            raise InputError(f"anchor vertex {containing} is outside the ground set")
        rec(anchor, S ^ anchor, 0)
    return out
