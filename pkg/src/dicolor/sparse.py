"""Weight-ranked vertex orders, principal/sparse predicates, and the
dense-layer decomposition.

Vertices are ranked by non-increasing weight with ties broken by
ascending index.  A nonempty X inside an ordered host Y is s-principal
when X sits inside the first floor(s*|X|) elements of Y; X is s-sparse
when it contains no s-principal subset, equivalently |Y_k cut X| < k/s
for every prefix length k.  All comparisons in this module are exact
rationals; no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BudgetExceededError, ClassificationGapError, InputError
from .graphs import Graph, bit_list, iter_bits, mask_of

SEARCH_CAP = 1 << 20


@dataclass(frozen=True)
class Weighting:
    """Nonnegative rational weight per vertex."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        for i, v in enumerate(self.values):
            if v < 0:
                raise InputError(f"weight of vertex {i} is negative")

    @classmethod
    def uniform(cls, n: int, value=1) -> "Weighting":
        return cls(tuple(Fraction(value) for _ in range(n)))

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def of(self, mask: int) -> Fraction:
        return sum((self.values[v] for v in iter_bits(mask)), Fraction(0))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RankedOrder:
    """Fixed vertex listing by non-increasing weight, ties by index."""

    order: tuple[int, ...]
    rank: tuple[int, ...]
    prefix_masks: tuple[int, ...]  # prefix_masks[k] = first k vertices

    @classmethod
    def from_weights(cls, w: Weighting) -> "RankedOrder":
        order = tuple(sorted(range(len(w)), key=lambda v: (-w.values[v], v)))
        rank = [0] * len(w)
        prefixes = [0]
        acc = 0
        for i, v in enumerate(order):
            rank[v] = i
            acc |= 1 << v
            prefixes.append(acc)
        return cls(order=order, rank=tuple(rank), prefix_masks=tuple(prefixes))

    @property
    def n(self) -> int:
        return len(self.order)

    def prefix(self, s) -> int:
        """Mask of the first floor(s) vertices (clamped to [0, n])."""
        k = _floor_count(s, self.n)
        return self.prefix_masks[k]

    def prefix_of(self, X: int, s) -> int:
        """Mask of the first floor(s) elements of X under this order."""
        k = _floor_count(s, X.bit_count())
        if k == 0:
            return 0
        out = 0
        taken = 0
        for v in self.order:
            if (X >> v) & 1:
                out |= 1 << v
                taken += 1
                if taken == k:
                    break
        return out

    def earlier_mask(self, v: int) -> int:
        """Vertices strictly before v in the order."""
        return self.prefix_masks[self.rank[v]]


def _floor_count(s, limit: int) -> int:
    if s < 0:
        raise InputError(f"prefix length must be nonnegative, got {s}")
    return min(math.floor(s), limit)


def ranked_order(w: Weighting) -> RankedOrder:
    return RankedOrder.from_weights(w)


def is_principal(order: RankedOrder, X: int, s, Y: int | None = None) -> bool:
    """True iff nonempty X lies within the first floor(s*|X|) elements of Y."""
    host = order.prefix_masks[-1] if Y is None else Y
    if X == 0:
        raise InputError("principality is defined for nonempty sets only")
    if X & ~host:
        raise InputError("X must be a subset of the host set")
    threshold = Fraction(s) * X.bit_count()
    return not (X & ~order.prefix_of(host, threshold))


def is_sparse(order: RankedOrder, X: int, s, Y: int | None = None) -> bool:
    """True iff |Y_k cut X| < k/s for every 1 <= k <= |Y| (exact)."""
    host = order.prefix_masks[-1] if Y is None else Y
    if X & ~host:
        raise InputError("X must be a subset of the host set")
    s = Fraction(s)
    hits = 0
    k = 0
    for v in order.order:
        if not (host >> v) & 1:
            continue
        k += 1
        if (X >> v) & 1:
            hits += 1
            if hits * s >= k:
                return False
    return True


@dataclass(frozen=True)
class SparseSplit:
    """Split of a vertex set A into sparse layers and a low-back-degree rest.

    ``l1`` is 2-sparse inside A, ``l2`` is t-sparse inside V (the two may
    overlap), and every vertex of ``rest`` has back degree below d, so
    G[rest] is floor(d)-degenerate.
    """

    l1: int
    l2: int
    rest: int
    back_degree: dict[int, int]
    t: Fraction
    d: Fraction
    order: RankedOrder

    @property
    def layer(self) -> int:
        return self.l1 | self.l2


def _back_degrees(G: Graph, A: int, order: RankedOrder) -> dict[int, int]:
    # neighbors inside G[A] that appear strictly earlier in the global order
    return {v: (G.adj[v] & A & order.earlier_mask(v)).bit_count() for v in iter_bits(A)}


def sparse_split(G: Graph, A: int, w: Weighting, t, d) -> SparseSplit:
    """Decompose A into L1, L2 and a rest of back degree below d.

    Walks the vertices of A with back degree >= d in rank order; the j-th
    such vertex v must satisfy |V_i cut A| > 2j (goes to L1) or
    |V_i| >= t * |V_i cut A| (goes to L2), where i is v's 1-based rank.
    When neither holds the prefix intersection V_i cut A is a t-principal
    set of average degree >= d, which contradicts the caller's hypothesis;
    it is raised as :class:`ClassificationGapError` with that witness.
    """
    t = Fraction(t)
    d = Fraction(d)
    order = ranked_order(w)
    if A & ~order.prefix_masks[-1]:
        raise InputError("A must be a subset of the vertex set")
    back = _back_degrees(G, A, order)
    layer = [v for v in order.order if (A >> v) & 1 and back[v] >= d]
    l1 = 0
    l2 = 0
    for j, v in enumerate(layer, start=1):
        i = order.rank[v] + 1
        inter = (order.prefix_masks[i] & A).bit_count()
        in_l1 = inter > 2 * j
        in_l2 = i >= t * inter
        if not (in_l1 or in_l2):
            raise ClassificationGapError(order.prefix_masks[i] & A, j, v)
        if in_l1:
            l1 |= 1 << v
        if in_l2:
            l2 |= 1 << v
    rest = A & ~(l1 | l2)
    assert w.of(rest) >= w.of(A) - w.of(l1) - w.of(l2)
    return SparseSplit(l1=l1, l2=l2, rest=rest, back_degree=back, t=t, d=d, order=order)


def find_principal_dense(
    G: Graph, A: int, w: Weighting, t, d, cap: int = SEARCH_CAP
) -> int | None:
    """Some t-principal subset of A with average degree >= d, or None.

    Scans the split's candidate prefix intersections first, then falls
    back to bounded exhaustive search over all principal candidates.
    """
    t = Fraction(t)
    d = Fraction(d)
    order = ranked_order(w)
    if A & ~order.prefix_masks[-1]:
        raise InputError("A must be a subset of the vertex set")
    back = _back_degrees(G, A, order)
    for v in order.order:
        if not ((A >> v) & 1) or back[v] < d:
            continue
        cand = order.prefix_masks[order.rank[v] + 1] & A
        if cand and _dense_enough(G, cand, d) and is_principal(order, cand, t):
            return cand
    total = 0
    for k in range(1, A.bit_count() + 1):
        P = order.prefix(t * k) & A
        verts = bit_list(P)
        if len(verts) < k:
            continue
        total += comb(len(verts), k)
        if total > cap:
            raise BudgetExceededError("principal-dense search", total, cap)
        for combo in combinations(verts, k):
            W = mask_of(combo)
            if _dense_enough(G, W, d):
                return W
    return None


def _dense_enough(G: Graph, mask: int, d: Fraction) -> bool:
    # average degree >= d  <=>  2 e(G[mask]) >= d |mask|
    twice_edges = sum((G.adj[v] & mask).bit_count() for v in iter_bits(mask))
    return twice_edges >= d * mask.bit_count()


def degeneracy_coloring(G: Graph, within: int | None = None) -> tuple[int, list[int | None]]:
    """Degeneracy of G[within] and a greedy coloring with at most k+1 colors.

    Repeatedly removes a minimum-degree vertex (ties by index); coloring
    runs along the reverse elimination order.
    """
    S = G.full_mask if within is None else within
    live = S
    elim: list[int] = []
    degeneracy = 0
    while live:
        best_v = -1
        best_d = -1
        for v in iter_bits(live):
            dv = (G.adj[v] & live).bit_count()
            if best_v < 0 or dv < best_d:
                best_v = v
                best_d = dv
        degeneracy = max(degeneracy, best_d)
        elim.append(best_v)
        live &= ~(1 << best_v)
    colors: list[int | None] = [None] * G.n
    for v in reversed(elim):
        used = {colors[u] for u in iter_bits(G.adj[v] & S) if colors[u] is not None}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return degeneracy, colors
