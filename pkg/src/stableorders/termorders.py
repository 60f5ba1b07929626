"""Term orders on monomials and how they interact with the exchange orders.

Every term order built here is a total order; the ones with strictly
decreasing positive weights refine the strongly-stable order, and the
intersection of all degree-compatible term orders is the ordinal sum of the
fixed-degree strongly-stable orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monomials import Monomial, monomials_up_to_degree
from .orders import Family, PosetId, leq, partial_sums, relation

LESS = -1
EQUAL = 0
GREATER = 1

_KINDS = ("lex", "deglex", "degrevlex", "weighted")


@dataclass(frozen=True)
class TermOrder:
    """A total order on monomials.

    kind 'weighted' compares weighted exponent sums (breaking ties
    lexicographically); with degree_first it compares total degree before the
    weighted sums, making the order degree-compatible regardless of weights.
    """

    kind: str
    weights: tuple[int, ...] | None = None
    degree_first: bool = False

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.kind == "weighted":
            if self.weights is None:
                raise ValueError("a weighted order needs a weight vector")
            object.__setattr__(self, "weights", tuple(self.weights))
            if not all(isinstance(w, int) and w > 0 for w in self.weights):
                raise ValueError("weights must be positive integers")
        else:
            if self.weights is not None:
                raise ValueError(f"{self.kind} does not take weights")
            if self.degree_first:
                raise ValueError("degree_first applies only to weighted orders")

    def compare(self, m, mp):
        """LESS, EQUAL, or GREATER for m against mp."""
        nvars = max(m.max_support(), mp.max_support())
        a = m.exponent_vector(nvars)
        b = mp.exponent_vector(nvars)
        if self.kind == "lex":
            return _lex(a, b)
        if self.kind == "deglex":
            return _cmp(m.degree(), mp.degree()) or _lex(a, b)
        if self.kind == "degrevlex":
            by_degree = _cmp(m.degree(), mp.degree())
            if by_degree:
                return by_degree
            for i in range(nvars - 1, -1, -1):
                if a[i] != b[i]:
                    # the monomial with the smaller trailing exponent wins
                    return GREATER if a[i] < b[i] else LESS
            return EQUAL
        if len(self.weights) < nvars:
            raise ValueError(
                f"weight vector of length {len(self.weights)} cannot compare "
                f"monomials in {nvars} variables"
            )
        if self.degree_first:
            by_degree = _cmp(m.degree(), mp.degree())
            if by_degree:
                return by_degree
        wa = sum(w * e for w, e in zip(self.weights, a))
        wb = sum(w * e for w, e in zip(self.weights, b))
        return _cmp(wa, wb) or _lex(a, b)

    def sort_key(self, m):
        """A key function usable with sorted(); ascending in this order."""
        return _SortAdapter(self, m)


@dataclass(frozen=True)
class _SortAdapter:
    order: TermOrder
    monomial: Monomial

    def __lt__(self, other):
        return self.order.compare(self.monomial, other.monomial) == LESS


def _cmp(x, y):
    return (x > y) - (x < y)


def _lex(a, b):
    for x, y in zip(a, b):
        if x != y:
            return GREATER if x > y else LESS
    return EQUAL


def is_strictly_decreasing(weights):
    return all(a > b for a, b in zip(weights, weights[1:])) and all(w > 0 for w in weights)


def refines_borel(order, nvars, max_degree):
    """Check that every strict strongly-stable relation on monomials in
    nvars variables up to max_degree is preserved by the term order.

    Returns (True, (top, bottom)) with a sample strict pair on success, or
    (False, (bottom, top)) naming a violated relation.
    """
    poset = PosetId(Family.BOREL, nvars)
    ground = monomials_up_to_degree(nvars, max_degree)
    sample = None
    for m in ground:
        for mp in ground:
            if m == mp or not leq(poset, m, mp):
                continue
            if order.compare(m, mp) != LESS:
                return False, (m, mp)
            if sample is None:
                sample = (mp, m)
    return True, sample


def ordinal_sum_leq(m, mp):
    """The ordinal sum of the fixed-degree strongly-stable orders: lower
    degree first, strongly-stable comparison within a degree."""
    if m.degree() != mp.degree():
        return m.degree() < mp.degree()
    return partial_sums(mp).dominates(partial_sums(m))


def weight_vectors_by_total(nvars):
    """Yield all strictly decreasing positive integer weight vectors, by
    increasing total, then by ascending leading weight."""

    def strict_desc(total, count, upper):
        if count == 0:
            if total == 0:
                yield ()
            return
        smallest_tail = count * (count - 1) // 2
        for first in range(count, min(upper - 1, total - smallest_tail) + 1):
            for tail in strict_desc(total - first, count - 1, first):
                yield (first,) + tail

    total = nvars * (nvars + 1) // 2
    while True:
        yield from strict_desc(total, nvars, total + 1)
        total += 1


def separating_witnesses(m, mp, nvars=None, budget=10_000):
    """For a strongly-stable-incomparable pair, find weight vectors whose
    weighted orders disagree about it.

    Returns (above, below): strictly decreasing weight vectors putting m
    above mp and below mp respectively.  Raises ValueError if the pair is
    comparable or the search budget runs out.
    """
    if nvars is None:
        nvars = max(m.max_support(), mp.max_support(), 1)
    rel = relation(PosetId(Family.BOREL, nvars), m, mp)
    if rel != "incomparable":
        raise ValueError(f"{m} and {mp} are comparable ({rel}); nothing to separate")
    above = below = None
    for tried, weights in enumerate(weight_vectors_by_total(nvars)):
        if tried >= budget:
            raise ValueError(f"no separating weight vectors within budget {budget}")
        side = TermOrder("weighted", weights).compare(m, mp)
        if side == GREATER and above is None:
            above = weights
        elif side == LESS and below is None:
            below = weights
        if above is not None and below is not None:
            return above, below
    raise ValueError("weight vector enumeration ended unexpectedly")


def random_weight_vector(nvars, rng, max_gap=5):
    """A random strictly decreasing positive weight vector."""
    gaps = [rng.randint(1, max_gap) for _ in range(nvars)]
    weights = []
    running = 0
    for g in reversed(gaps):
        running += g
        weights.append(running)
    return tuple(reversed(weights))


__all__ = [
    "LESS",
    "EQUAL",
    "GREATER",
    "TermOrder",
    "is_strictly_decreasing",
    "refines_borel",
    "ordinal_sum_leq",
    "weight_vectors_by_total",
    "separating_witnesses",
    "random_weight_vector",
]
