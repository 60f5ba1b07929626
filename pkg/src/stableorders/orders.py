"""The divisibility, strongly-stable (Borel), stable, and dual partial orders.

Each order is generated by upward exchange moves (and, when degrees are
unbounded, by multiplication): the strongly-stable order allows replacing
any occurring variable by one of smaller index, while the stable order only
lets the largest-index variable move.  A poset is identified by a family
code plus optional bounds on the number of variables and the degree.

Comparability in the strongly-stable family is decided in linear time from
partial sums of the exponent vector; the stable family memoizes reachability
tables per fixed (nvars, degree) ground set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import accumulate

from .monomials import (
    Monomial,
    graded_lex_key,
    borel_moves_up,
    stable_moves_up,
    index_weight,
    monomials_of_degree,
    monomials_up_to_degree,
)


class GroundSetError(ValueError):
    """A monomial lies outside the ground set of the poset at hand."""


class Family(Enum):
    """The four order families, keyed by their one-letter CLI codes."""

    DIVISIBILITY = "D"
    BOREL = "A"
    STABLE = "B"
    DUAL_BOREL = "C"

    @property
    def code(self):
        return self.value

    @classmethod
    def from_code(cls, code):
        for fam in cls:
            if fam.value == code:
                return fam
        raise ValueError(f"unknown family code {code!r}; expected one of A, B, C, D")


_POSET_RE = re.compile(r"^([ABCD])(?:\[(.*)\])?$")


@dataclass(frozen=True)
class PosetId:
    """A family code plus optional bounds: nvars/degree of None mean unbounded.

    For families A, B, C a finite degree restricts the ground set to monomials
    of exactly that degree; for family D it bounds the degree from above
    (a staircase region).
    """

    family: Family
    nvars: int | None = None
    degree: int | None = None

    def __post_init__(self):
        if self.nvars is not None and self.nvars < 1:
            raise ValueError("nvars must be at least 1")
        if self.degree is not None and self.degree < 0:
            raise ValueError("degree must be non-negative")
        if self.family is Family.DUAL_BOREL and self.nvars is None:
            raise ValueError(
                "family C needs a finite number of variables (the renaming window); "
                "use the Young-diagram containment for the unbounded dual order"
            )

    @classmethod
    def parse(cls, text):
        """Parse identifiers like 'A[n=3,d=4]', 'B[n=3]', 'A[*,d=4]', or 'D'."""
        match = _POSET_RE.match(text.strip())
        if match is None:
            raise ValueError(f"malformed poset id {text!r}")
        family = Family.from_code(match.group(1))
        fields: dict[str, int] = {}
        body = match.group(2)
        if body is not None and body.strip():
            tokens = [t.strip() for t in body.split(",")]
            if len(tokens) > 2:
                raise ValueError(f"too many fields in poset id {text!r}")
            for token in tokens:
                if token == "*":
                    continue
                name, eq, value = token.partition("=")
                name = name.strip()
                if not eq or name not in ("n", "d"):
                    raise ValueError(f"malformed field {token!r} in poset id {text!r}")
                if name in fields:
                    raise ValueError(f"field {name!r} given twice in poset id {text!r}")
                try:
                    fields[name] = int(value)
                except ValueError:
                    raise ValueError(f"non-integer value in field {token!r} of poset id {text!r}") from None
        return cls(family, fields.get("n"), fields.get("d"))

    def __str__(self):
        code = self.family.code
        if self.nvars is None and self.degree is None:
            return code
        if self.degree is None:
            return f"{code}[n={self.nvars}]"
        if self.nvars is None:
            return f"{code}[*,d={self.degree}]"
        return f"{code}[n={self.nvars},d={self.degree}]"

    def contains(self, m):
        """Whether the monomial belongs to this poset's ground set."""
        if self.nvars is not None and m.max_support() > self.nvars:
            return False
        if self.degree is not None:
            if self.family is Family.DIVISIBILITY:
                return m.degree() <= self.degree
            return m.degree() == self.degree
        return True

    def is_finite(self):
        return self.nvars is not None and self.degree is not None


def _require_member(poset, m):
    if not poset.contains(m):
        raise GroundSetError(f"{m} is not in the ground set of {poset}")


def ground_monomials(poset):
    """The ground set of a finite poset, in graded-lex order."""
    if not poset.is_finite():
        raise ValueError(f"{poset} has an infinite ground set")
    if poset.family is Family.DIVISIBILITY:
        return monomials_up_to_degree(poset.nvars, poset.degree)
    return monomials_of_degree(poset.nvars, poset.degree)


@dataclass(frozen=True)
class PartialSumSequence:
    """A weakly increasing prefix followed by an eventually constant tail.

    The canonical form drops prefix entries equal to the tail.  Sequences of
    this shape are exactly the running partial sums of exponent vectors, with
    the tail recording the total degree.
    """

    prefix: tuple[int, ...]
    tail: int

    def __post_init__(self):
        prefix = tuple(self.prefix)
        if not isinstance(self.tail, int) or self.tail < 0:
            raise ValueError("tail must be a non-negative integer")
        last = 0
        for v in prefix:
            if not isinstance(v, int) or v < last:
                raise ValueError(f"prefix must be weakly increasing non-negative ints, got {prefix!r}")
            last = v
        if prefix and prefix[-1] > self.tail:
            raise ValueError("prefix entries may not exceed the tail")
        while prefix and prefix[-1] == self.tail:
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)

    def value_at(self, i):
        """The i-th value (1-based); equals the tail beyond the prefix."""
        if i < 1:
            raise ValueError("positions start at 1")
        return self.prefix[i - 1] if i <= len(self.prefix) else self.tail

    def values(self, length):
        return tuple(self.value_at(i) for i in range(1, length + 1))

    def dominates(self, other):
        """Componentwise >= at every position, tails included."""
        if self.tail < other.tail:
            return False
        span = max(len(self.prefix), len(other.prefix))
        return all(self.value_at(i) >= other.value_at(i) for i in range(1, span + 1))

    def __str__(self):
        inner = ",".join(str(v) for v in self.prefix)
        return f"[{inner}|{self.tail}]"


def partial_sums(m):
    """Running partial sums of the exponent vector, tail = total degree."""
    sums = tuple(accumulate(m.exps))
    return PartialSumSequence(sums, m.degree())


def monomial_from_partial_sums(seq):
    """Inverse of partial_sums: difference the sequence back to exponents."""
    values = list(seq.prefix) + [seq.tail]
    exps = [values[0]] + [values[k] - values[k - 1] for k in range(1, len(values))]
    return Monomial(exps)


def dual_rename(m, nvars):
    """Reverse variable indices inside a window: x_i becomes x_{nvars+1-i}."""
    if m.max_support() > nvars:
        raise ValueError(f"{m} does not fit in {nvars} variables")
    return Monomial(reversed(m.exponent_vector(nvars)))


def antitone_dual_sequence(m, window):
    """The order-reversing bijection from monomials in `window` variables onto
    partial-sum sequences of degree-`window` monomials.

    The image sequence starts with exponent(1) zeros, exponent(2) ones, and so
    on, and is constant `window` from position degree+1 onward.
    """
    if m.max_support() > window:
        raise ValueError(f"{m} does not fit in {window} variables")
    prefix = tuple(k for k in range(window) for _ in range(m.exponent(k + 1)))
    return PartialSumSequence(prefix, window)


class _StableTable:
    """Reachability table for the stable order on a fixed (nvars, degree) set."""

    __slots__ = ("vertices", "index", "up")

    def __init__(self, vertices, index, up):
        self.vertices = vertices
        self.index = index
        self.up = up

    def leq(self, m, mp):
        return bool(self.up[self.index[m]] >> self.index[mp] & 1)

    def down_masks(self):
        n = len(self.vertices)
        down = [0] * n
        for i in range(n):
            mask = self.up[i]
            while mask:
                low = mask & -mask
                down[low.bit_length() - 1] |= 1 << i
                mask ^= low
        return down


@lru_cache(maxsize=None)
def _stable_context(nvars, degree):
    """Upward-reachability bitmasks for the stable order on all monomials of
    one degree, computed by a sweep in decreasing index-weight order."""
    vertices = tuple(monomials_of_degree(nvars, degree))
    index = {m: i for i, m in enumerate(vertices)}
    up = [0] * len(vertices)
    for i in sorted(range(len(vertices)), key=lambda k: index_weight(vertices[k])):
        mask = 1 << i
        for target in stable_moves_up(vertices[i]):
            mask |= up[index[target]]
        up[i] = mask
    return _StableTable(vertices, index, tuple(up))


def _effective_nvars(poset, m, mp):
    if poset.nvars is not None:
        return poset.nvars
    return max(m.max_support(), mp.max_support(), 1)


def _stable_glued_search(m, mp, nvars):
    """Breadth-first search interleaving stable moves with multiplication."""
    if m == mp:
        return True
    target_degree = mp.degree()
    if m.degree() > target_degree:
        return False
    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for u in frontier:
            neighbors = set(stable_moves_up(u))
            if u.degree() < target_degree:
                neighbors.update(u.times_var(i) for i in range(1, nvars + 1))
            for w in neighbors:
                if w == mp:
                    return True
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return False


def leq(poset, m, mp):
    """Decide m <= mp in the given poset.

    Strongly-stable comparability is partial-sum domination; the stable family
    uses memoized reachability tables (fixed degree) or an interleaved search
    (unbounded degree).  Raises GroundSetError off the ground set.
    """
    _require_member(poset, m)
    _require_member(poset, mp)
    family = poset.family
    if family is Family.DIVISIBILITY:
        return m.divides(mp)
    if family is Family.BOREL:
        return partial_sums(mp).dominates(partial_sums(m))
    if family is Family.DUAL_BOREL:
        n = poset.nvars
        return partial_sums(dual_rename(mp, n)).dominates(partial_sums(dual_rename(m, n)))
    if m == mp:
        return True
    if poset.degree is not None:
        table = _stable_context(_effective_nvars(poset, m, mp), poset.degree)
        return table.leq(m, mp)
    return _stable_glued_search(m, mp, _effective_nvars(poset, m, mp))


def relation(poset, m, mp):
    """One of 'lt', 'gt', 'eq', 'incomparable'."""
    forward = leq(poset, m, mp)
    backward = leq(poset, mp, m)
    if forward and backward:
        return "eq"
    if forward:
        return "lt"
    if backward:
        return "gt"
    return "incomparable"


def reachability_oracle(poset, m, mp):
    """Decide m <= mp by brute-force search over generating relations only.

    Used as an independent check on leq: it never consults partial sums or
    the memoized tables, just walks exchange moves (and multiplication when
    the degree is unbounded).
    """
    _require_member(poset, m)
    _require_member(poset, mp)
    family = poset.family
    if family is Family.DUAL_BOREL:
        n = poset.nvars
        renamed = PosetId(Family.BOREL, n, poset.degree)
        return reachability_oracle(renamed, dual_rename(m, n), dual_rename(mp, n))
    if m == mp:
        return True
    target_degree = mp.degree()
    if m.degree() > target_degree:
        return False
    nvars = _effective_nvars(poset, m, mp)
    allow_multiplication = poset.degree is None or family is Family.DIVISIBILITY

    def neighbors(u):
        out = set()
        if family is Family.BOREL:
            out.update(borel_moves_up(u))
        elif family is Family.STABLE:
            out.update(stable_moves_up(u))
        if allow_multiplication and u.degree() < target_degree:
            out.update(u.times_var(i) for i in range(1, nvars + 1))
        return out

    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for u in frontier:
            for w in neighbors(u):
                if w == mp:
                    return True
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return False


__all__ = [
    "GroundSetError",
    "Family",
    "PosetId",
    "PartialSumSequence",
    "partial_sums",
    "monomial_from_partial_sums",
    "dual_rename",
    "antitone_dual_sequence",
    "leq",
    "relation",
    "reachability_oracle",
    "ground_monomials",
    "graded_lex_key",
    "Monomial",
]
