"""Filters (up-closed sets) of the monomial orders: tests, counts, enumeration.

Counting uses a pivot recursion on bitmask subposets: filters avoiding a
pivot element are filters of the poset minus the pivot's down-set, and
filters containing it correspond to filters of the poset minus the pivot's
up-set.  Tracking cardinalities turns the count into a polynomial (one
coefficient per filter size), memoized per bitmask.

Also here: the closed-form counters for two and three variables, the
weighted-walk recursion behind the stable-order counts, and monomial-ideal
utilities (strongly-stable/stable closures and membership).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .monomials import (
    Monomial,
    borel_moves_up,
    graded_lex_key,
    stable_moves_up,
)
from .orders import Family, GroundSetError, PosetId, dual_rename
from .lattice import CapExceededError


def _generating_moves(poset, m):
    """Upward moves of m that generate the (finite) poset's order."""
    family = poset.family
    if family is Family.BOREL:
        return borel_moves_up(m)
    if family is Family.STABLE:
        return stable_moves_up(m)
    if family is Family.DUAL_BOREL:
        n = poset.nvars
        return frozenset(dual_rename(u, n) for u in borel_moves_up(dual_rename(m, n)))
    # divisibility staircase
    if m.degree() >= poset.degree:
        return frozenset()
    return frozenset(m.times_var(i) for i in range(1, poset.nvars + 1))


def is_filter(elements, poset):
    """Whether the set is upward closed in the finite poset.

    It is enough to close under single generating moves, since the order is
    the reflexive-transitive closure of those moves.
    """
    if not poset.is_finite():
        raise ValueError(f"{poset} has an infinite ground set")
    members = frozenset(elements)
    for m in members:
        if not poset.contains(m):
            raise GroundSetError(f"{m} is not in the ground set of {poset}")
        for u in _generating_moves(poset, m):
            if u not in members:
                return False
    return True


def interior(elements, nvars):
    """Members that stay inside under every downward exchange x_j/x_i, i < j.

    A monomial v survives when for all i < j <= nvars with x_i dividing v,
    the monomial v*x_j/x_i also belongs to the set.
    """
    members = frozenset(elements)
    out = set()
    for v in members:
        ok = True
        for i in range(1, nvars + 1):
            if v.exponent(i) == 0:
                continue
            for j in range(i + 1, nvars + 1):
                if v.transfer(j, i) not in members:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(v)
    return frozenset(out)


def boundary(elements, nvars):
    """The set minus its interior."""
    return frozenset(elements) - interior(elements, nvars)


def filter_layers(elements, nvars, degree):
    """Slice a set of degree-`degree` monomials by the exponent of the last
    variable, stripping that variable off; layer i collects m with x_nvars^i."""
    layers = [set() for _ in range(degree + 1)]
    for m in elements:
        if m.max_support() > nvars or m.degree() != degree:
            raise GroundSetError(f"{m} is not a degree-{degree} monomial in {nvars} variables")
        i = m.exponent(nvars)
        layers[i].add(Monomial(m.exps[: nvars - 1]))
    return [frozenset(layer) for layer in layers]


def is_filter_by_layers(elements, nvars, degree):
    """Layerwise filter test: every slice must be a filter one variable down,
    and pushing the next slice up by x1 must land in the previous slice's
    interior.  Agrees with is_filter on the strongly-stable order."""
    if nvars < 3:
        raise ValueError("the layerwise test needs at least three variables")
    layers = filter_layers(elements, nvars, degree)
    for i, layer in enumerate(layers):
        if not is_filter(layer, PosetId(Family.BOREL, nvars - 1, degree - i)):
            return False
    for i in range(degree):
        lifted = {m.times_var(1) for m in layers[i + 1]}
        if not lifted <= interior(layers[i], nvars - 1):
            return False
    return True


def _filter_poly(h, mask, memo, rng=None):
    """Filter counts of the bitmask subposet, indexed by filter cardinality."""
    out = memo.get(mask)
    if out is not None:
        return out
    if mask == 0:
        memo[mask] = (1,)
        return (1,)
    up = h.up_masks()
    down = h.down_masks()
    if rng is None:
        pivot, best = -1, -1
        probe = mask
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            size = (up[i] & mask).bit_count()
            if size > best:
                pivot, best = i, size
            probe ^= low
    else:
        candidates = [i for i in range(len(h)) if mask >> i & 1]
        pivot = rng.choice(candidates)
    principal = up[pivot] & mask
    without = _filter_poly(h, mask & ~(down[pivot] & mask), memo, rng)
    within = _filter_poly(h, mask & ~principal, memo, rng)
    shift = principal.bit_count()
    out = [0] * (mask.bit_count() + 1)
    for k, v in enumerate(without):
        out[k] += v
    for k, v in enumerate(within):
        out[k + shift] += v
    out = tuple(out)
    memo[mask] = out
    return out


def count_filters(h, cardinality=None, *, pivot_rng=None):
    """Number of filters of the diagram's poset, optionally of one cardinality.

    The empty poset has exactly one filter (the empty one).  Passing a random
    generator as pivot_rng re-derives the count with random pivots (the result
    is pivot-independent; used as a self-check).
    """
    full = (1 << len(h)) - 1
    memo = {} if pivot_rng is not None else h._filter_polys
    poly = _filter_poly(h, full, memo, pivot_rng)
    if cardinality is None:
        return sum(poly)
    if 0 <= cardinality < len(poly):
        return poly[cardinality]
    return 0


def enumerate_filters(h, cardinality=None, cap=1_000_000):
    """Yield every filter (as a frozenset of monomials), largest poset first.

    Raises CapExceededError when more than `cap` filters would be produced.
    """
    total = count_filters(h, cardinality)
    if total > cap:
        raise CapExceededError(f"{total} filters exceed the cap of {cap}")
    memo = h._filter_polys
    up, down = h.up_masks(), h.down_masks()

    def viable(mask, chosen):
        if cardinality is None:
            return True
        need = cardinality - chosen.bit_count()
        if need < 0 or need > mask.bit_count():
            return False
        poly = _filter_poly(h, mask, memo)
        return poly[need] > 0

    def emit(mask, chosen):
        if mask == 0:
            yield chosen
            return
        pivot, best = -1, -1
        probe = mask
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            size = (up[i] & mask).bit_count()
            if size > best:
                pivot, best = i, size
            probe ^= low
        principal = up[pivot] & mask
        for branch, picked in (
            (mask & ~(down[pivot] & mask), chosen),
            (mask & ~principal, chosen | principal),
        ):
            if viable(branch, picked):
                yield from emit(branch, picked)

    full = (1 << len(h)) - 1
    if viable(full, 0):
        for chosen in emit(full, 0):
            yield frozenset(h.vertices[i] for i in range(len(h)) if chosen >> i & 1)


def catalan(n):
    """The n-th Catalan number, comb(2n, n)/(n+1)."""
    if n < 0:
        raise ValueError("catalan(n) needs n >= 0")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def filter_count_three_vars(d, v):
    """Filters of cardinality v in the strongly-stable order on degree-d
    monomials in three variables: F(d,v) = F(d-1,v) + F(d-1,v-(d+1))."""
    if d < 1:
        raise ValueError("the three-variable recurrence starts at degree 1")
    if v < 0:
        return 0
    if d == 1:
        return 1 if v <= 3 else 0
    return filter_count_three_vars(d - 1, v) + filter_count_three_vars(d - 1, v - (d + 1))


@lru_cache(maxsize=None)
def weighted_walk_count(d, a, b, w):
    """Number of monotone lattice walks from (a, b) down-right to (d+2, 0)
    inside x+y <= d+2 whose vertical steps, labelled d+2-x-y at the step's
    upper end, sum to w.

    The b=0 base row is the displayed boundary convention; the recursion
    itself only ever bottoms out at b=1, so that row is reachable only by
    direct call.
    """
    if d < 0 or a < 0 or b < 0 or a + b > d + 2:
        raise ValueError("walk endpoint out of range")
    if b == 0:
        return 1 if w == d - a + 1 else 0
    if b == 1:
        return 1 if 0 <= w <= d + 1 - a else 0
    return sum(
        weighted_walk_count(d, j, b - 1, w + j + b - d - 2)
        for j in range(a, d + 2 - b + 1)
    )


def _walk_weight_total(e, w):
    """Filters of the two-variable divisibility staircase of degree e, counted
    by weight w (equivalently: weighted walks across the full region)."""
    if w < 0:
        return 0
    return weighted_walk_count(e, 0, e + 2, w)


def stable_filter_counts(d):
    """(total, by-cardinality) filter counts of the degree-d stable order in
    three variables, via the layer recursion GG(d,v) = GG(d-1,v) + CC(d-1,v-d-1)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d == 0:
        return 2, (1, 1)
    gg = [1, 1, 1, 1]
    for e in range(2, d + 1):
        size = (e + 1) * (e + 2) // 2
        gg = [
            (gg[v] if v < len(gg) else 0) + _walk_weight_total(e - 1, v - (e + 1))
            for v in range(size + 1)
        ]
    return sum(gg), tuple(gg)


# ---------------------------------------------------------------------------
# monomial ideals given by generators


def minimal_generators(gens):
    """The divisibility antichain generating the same ideal, graded-lex sorted."""
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=graded_lex_key):
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    return tuple(kept)


def ideal_contains(gens, m):
    """Membership in the monomial ideal generated by gens."""
    return any(g.divides(m) for g in gens)


def _move_closure(gens, moves_fn):
    basis = list(minimal_generators(gens))
    queue = list(basis)
    while queue:
        g = queue.pop()
        for u in moves_fn(g):
            if not ideal_contains(basis, u):
                basis.append(u)
                queue.append(u)
    return minimal_generators(basis)


def borel_closure(gens):
    """Smallest strongly-stable (Borel) ideal containing the given generators."""
    return _move_closure(gens, borel_moves_up)


def stable_closure(gens):
    """Smallest stable ideal containing the given generators."""
    return _move_closure(gens, stable_moves_up)


def is_borel_ideal(gens):
    """Generator-local test: every exchange move of every generator stays in
    the ideal.  (Checked against the degreewise definition in the test suite.)"""
    return all(ideal_contains(gens, u) for g in gens for u in borel_moves_up(g))


def is_stable_ideal(gens):
    return all(ideal_contains(gens, u) for g in gens for u in stable_moves_up(g))


__all__ = [
    "is_filter",
    "interior",
    "boundary",
    "filter_layers",
    "is_filter_by_layers",
    "count_filters",
    "enumerate_filters",
    "catalan",
    "filter_count_three_vars",
    "weighted_walk_count",
    "stable_filter_counts",
    "minimal_generators",
    "ideal_contains",
    "borel_closure",
    "stable_closure",
    "is_borel_ideal",
    "is_stable_ideal",
    "CapExceededError",
    "HasseDiagram",
    "build_hasse",
    "ground_monomials",
]
