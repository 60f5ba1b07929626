"""Monomials in finitely many variables x1, x2, ... and their exchange moves.

A monomial is stored as a tuple of non-negative integer exponents with
trailing zeros stripped, so x1^2*x3 is (2, 0, 1) and the unit is ().
Everything downstream (orders, lattices, filters) is built on the two
"exchange move" generators defined here: replacing one copy of a variable
x_j by a variable x_i with smaller index.
"""

from __future__ import annotations

import re
from ast import literal_eval

_TERM_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


class Monomial:
    """An exponent vector, canonicalized by stripping trailing zeros."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exponents=()):
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {e!r}")
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", hash(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({list(self.exps)!r})"

    def __str__(self):
        if not self.exps:
            return "1"
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)

    @classmethod
    def parse(cls, text):
        """Parse 'x1^2*x3', the unit '1', or an exponent-vector '[2,0,1]'."""
        text = text.strip()
        if text == "1":
            return cls()
        if text.startswith("["):
            vec = literal_eval(text)
            if not isinstance(vec, (list, tuple)):
                raise ValueError(f"not an exponent vector: {text!r}")
            return cls(vec)
        exps: dict[int, int] = {}
        for term in text.split("*"):
            match = _TERM_RE.match(term.strip())
            if match is None:
                raise ValueError(f"malformed monomial term {term!r} in {text!r}")
            index = int(match.group(1))
            if index < 1:
                raise ValueError(f"variable index must be >= 1 in {text!r}")
            power = int(match.group(2)) if match.group(2) else 1
            exps[index] = exps.get(index, 0) + power
        width = max(exps)
        return cls(exps.get(i, 0) for i in range(1, width + 1))

    def exponent(self, i):
        """Exponent of x_i (1-based); zero beyond the stored support."""
        if i < 1:
            raise ValueError("variable indices start at 1")
        return self.exps[i - 1] if i <= len(self.exps) else 0

    def exponent_vector(self, nvars=None):
        """Exponents as a list, zero-padded to nvars when given."""
        if nvars is None:
            return list(self.exps)
        if nvars < len(self.exps):
            raise ValueError(f"{self} does not fit in {nvars} variables")
        return list(self.exps) + [0] * (nvars - len(self.exps))

    def degree(self):
        """Total degree, the sum of all exponents."""
        return sum(self.exps)

    def max_support(self):
        """Largest index of a variable that occurs; 0 for the unit."""
        return len(self.exps)

    def divides(self, other):
        """True when every exponent of self is at most the matching one of other."""
        if len(self.exps) > len(other.exps):
            return False
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other):
        n = max(len(self.exps), len(other.exps))
        return Monomial(self.exponent(i) + other.exponent(i) for i in range(1, n + 1))

    def exact_quotient(self, other):
        """self / other, defined only when other divides self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.exponent(i) - other.exponent(i) for i in range(1, len(self.exps) + 1))

    def times_var(self, i):
        """Multiply by the single variable x_i."""
        n = max(len(self.exps), i)
        return Monomial(self.exponent(k) + (1 if k == i else 0) for k in range(1, n + 1))

    def div_var(self, i):
        """Divide by the single variable x_i (which must occur)."""
        if self.exponent(i) == 0:
            raise ValueError(f"x{i} does not divide {self}")
        return Monomial(self.exponent(k) - (1 if k == i else 0) for k in range(1, len(self.exps) + 1))

    def transfer(self, i, j):
        """Replace one copy of x_j by x_i, i.e. multiply by x_i/x_j."""
        return self.times_var(i).div_var(j)

    def gcd(self, other):
        n = min(len(self.exps), len(other.exps))
        return Monomial(min(self.exps[k], other.exps[k]) for k in range(n))

    def lcm(self, other):
        n = max(len(self.exps), len(other.exps))
        return Monomial(max(self.exponent(i), other.exponent(i)) for i in range(1, n + 1))


#: The unit monomial.
ONE = Monomial(())


def graded_lex_key(m):
    """Sort key: total degree first, then the exponent tuple lexicographically."""
    return (m.degree(), m.exps)


def borel_moves_up(m):
    """All single exchange moves x_i/x_j with i < j, one for each usable pair.

    These generate the strongly-stable (Borel) order: each move replaces one
    copy of some occurring variable x_j by a strictly smaller-index variable.
    """
    moves = set()
    for j in range(2, m.max_support() + 1):
        if m.exponent(j) == 0:
            continue
        for i in range(1, j):
            moves.add(m.transfer(i, j))
    return frozenset(moves)


def stable_moves_up(m):
    """Exchange moves allowed in the stable order: only the last variable moves.

    Only one copy of x_v, v = max_support(m), may be replaced by a
    smaller-index variable.
    """
    v = m.max_support()
    if v < 2:
        return frozenset()
    return frozenset(m.transfer(i, v) for i in range(1, v))


def index_weight(m):
    """Sum of variable indices counted with multiplicity.

    Strictly decreases along every upward exchange move, which certifies
    antisymmetry of the generated orders and termination of searches.
    """
    return sum(i * e for i, e in enumerate(m.exps, start=1))


def graded_weight(m):
    """(-degree, index weight): strictly lex-decreases along moves and
    multiplication by a variable alike."""
    return (-m.degree(), index_weight(m))


def monomials_of_degree(nvars, degree):
    """All monomials of the given total degree in x1..x_nvars, graded-lex order."""
    if nvars < 0 or degree < 0:
        raise ValueError("nvars and degree must be non-negative")
    if nvars == 0:
        return [ONE] if degree == 0 else []

    out = []

    def build(prefix, remaining, slots):
        if slots == 1:
            out.append(Monomial(prefix + (remaining,)))
            return
        for e in range(remaining + 1):
            build(prefix + (e,), remaining - e, slots - 1)

    build((), degree, nvars)
    return out


def monomials_up_to_degree(nvars, max_degree):
    """All monomials of degree <= max_degree in x1..x_nvars, graded-lex order."""
    out = []
    for d in range(max_degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out
