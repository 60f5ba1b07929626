"""Hasse diagrams, meets and joins, rank data, and Gaussian polynomials.

Fixed-degree ground sets of the strongly-stable order form distributive
lattices computed coordinatewise on partial sums; the stable order also
forms a lattice but a non-modular one, with an explicit three-case meet
recursion and joins found by scanning minimal common upper bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import TopologicalSorter

from .monomials import Monomial, monomials_up_to_degree, stable_moves_up
from .orders import (
    Family,
    GroundSetError,
    PosetId,
    _stable_context,
    dual_rename,
    ground_monomials,
    leq,
    monomial_from_partial_sums,
    partial_sums,
    PartialSumSequence,
)


class CapExceededError(ValueError):
    """A requested construction is larger than the allowed cap."""


class NotLatticeError(ValueError):
    """Some pair of vertices lacks a unique meet or join."""


class NotGradedError(ValueError):
    """Maximal chains of the diagram do not all have the same length."""


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(eq=False)
class HasseDiagram:
    """A finite poset given by its vertices and covering pairs.

    Vertices are in graded-lex order; covers are (lower, upper) index pairs.
    Reachability bitmasks are computed lazily and cached.
    """

    poset: PosetId
    vertices: tuple[Monomial, ...]
    covers: tuple[tuple[int, int], ...]
    _index: dict | None = field(default=None, repr=False)
    _up: list | None = field(default=None, repr=False)
    _down: list | None = field(default=None, repr=False)
    _filter_polys: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.vertices)

    def index(self, m):
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self.vertices)}
        try:
            return self._index[m]
        except KeyError:
            raise GroundSetError(f"{m} is not a vertex of this diagram") from None

    def up_masks(self):
        """up_masks()[i] has bit j set iff vertex i <= vertex j."""
        if self._up is None:
            uppers = [[] for _ in self.vertices]
            for lo, hi in self.covers:
                uppers[lo].append(hi)
            graph = {i: uppers[i] for i in range(len(self.vertices))}
            up = [0] * len(self.vertices)
            for i in TopologicalSorter(graph).static_order():
                mask = 1 << i
                for j in uppers[i]:
                    mask |= up[j]
                up[i] = mask
            self._up = up
        return self._up

    def down_masks(self):
        if self._down is None:
            down = [0] * len(self.vertices)
            for i, mask in enumerate(self.up_masks()):
                for j in _iter_bits(mask):
                    down[j] |= 1 << i
            self._down = down
        return self._down

    def leq_indices(self, i, j):
        return bool(self.up_masks()[i] >> j & 1)

    def leq(self, m, mp):
        return self.leq_indices(self.index(m), self.index(mp))

    def minimal_vertices(self):
        has_lower = {hi for _, hi in self.covers}
        return [self.vertices[i] for i in range(len(self.vertices)) if i not in has_lower]

    def maximal_vertices(self):
        has_upper = {lo for lo, _ in self.covers}
        return [self.vertices[i] for i in range(len(self.vertices)) if i not in has_upper]

    def to_dot(self):
        """DOT text with one node per vertex and one edge per cover (upper -> lower)."""
        lines = ["digraph hasse {"]
        for m in self.vertices:
            lines.append(f'  "{m}";')
        for lo, hi in self.covers:
            lines.append(f'  "{self.vertices[hi]}" -> "{self.vertices[lo]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self):
        nvars = self.poset.nvars
        return {
            "poset": str(self.poset),
            "vertices": [
                {"monomial": str(m), "exponents": m.exponent_vector(nvars)}
                for m in self.vertices
            ],
            "covers": [list(c) for c in self.covers],
        }


def _covers_from_leq(vertices, leq_pair):
    """Transitive reduction of an explicit order relation (generic fallback)."""
    n = len(vertices)
    up = [0] * n
    for i in range(n):
        mask = 1 << i
        for j in range(n):
            if j != i and leq_pair(vertices[i], vertices[j]):
                mask |= 1 << j
        up[i] = mask
    down = [0] * n
    for i in range(n):
        for j in _iter_bits(up[i]):
            down[j] |= 1 << i
    covers = []
    for i in range(n):
        strict_up = up[i] & ~(1 << i)
        for j in _iter_bits(strict_up):
            between = strict_up & down[j] & ~(1 << j)
            if between == 0:
                covers.append((i, j))
    return sorted(covers)


def build_hasse(poset, cap=50_000, max_degree=None):
    """Build the Hasse diagram of a finite ground set.

    Fixed-degree strongly-stable diagrams use adjacent-index exchange covers;
    stable diagrams reduce the move edges against the reachability table;
    divisibility uses multiply-by-one-variable covers.  For an unbounded-degree
    poset pass max_degree to build the truncation to degrees <= max_degree
    (covers are then computed by generic transitive reduction of leq).
    """
    if poset.nvars is None:
        raise ValueError(f"{poset} has unboundedly many variables; no finite diagram")
    n = poset.nvars

    if poset.degree is None:
        if max_degree is None:
            raise ValueError(f"{poset} is degree-unbounded; pass max_degree to truncate")
        vertices = tuple(monomials_up_to_degree(n, max_degree))
        if len(vertices) > cap:
            raise CapExceededError(f"{len(vertices)} vertices exceed the cap of {cap}")
        covers = tuple(_covers_from_leq(vertices, lambda a, b: leq(poset, a, b)))
        return HasseDiagram(poset, vertices, covers)

    vertices = tuple(ground_monomials(poset))
    if len(vertices) > cap:
        raise CapExceededError(f"{len(vertices)} vertices exceed the cap of {cap}")
    index = {m: i for i, m in enumerate(vertices)}
    covers = []

    if poset.family is Family.BOREL:
        for i, m in enumerate(vertices):
            for k in range(1, n):
                if m.exponent(k + 1) > 0:
                    covers.append((i, index[m.transfer(k, k + 1)]))
    elif poset.family is Family.DUAL_BOREL:
        for i, m in enumerate(vertices):
            renamed = dual_rename(m, n)
            for k in range(1, n):
                if renamed.exponent(k + 1) > 0:
                    upper = dual_rename(renamed.transfer(k, k + 1), n)
                    covers.append((i, index[upper]))
    elif poset.family is Family.STABLE:
        table = _stable_context(n, poset.degree)
        for i, m in enumerate(vertices):
            targets = sorted(table.index[t] for t in stable_moves_up(m))
            for j in targets:
                if not any(k != j and table.up[k] >> j & 1 for k in targets):
                    covers.append((i, j))
    else:  # divisibility staircase
        for i, m in enumerate(vertices):
            if m.degree() < poset.degree:
                for k in range(1, n + 1):
                    covers.append((i, index[m.times_var(k)]))

    diagram = HasseDiagram(poset, vertices, tuple(sorted(set(covers))))
    return diagram


def meet(poset, m, mp):
    """Greatest lower bound of m and mp in the given poset."""
    return _bound(poset, m, mp, want_join=False)


def join(poset, m, mp):
    """Least upper bound of m and mp in the given poset."""
    return _bound(poset, m, mp, want_join=True)


def _bound(poset, m, mp, want_join):
    for x in (m, mp):
        if not poset.contains(x):
            raise GroundSetError(f"{x} is not in the ground set of {poset}")
    family = poset.family
    if family is Family.DIVISIBILITY:
        if not want_join:
            return m.gcd(mp)
        out = m.lcm(mp)
        if not poset.contains(out):
            raise NotLatticeError(f"{m} and {mp} have no upper bound in {poset}")
        return out
    if family is Family.BOREL:
        return _borel_bound(m, mp, want_join)
    if family is Family.DUAL_BOREL:
        # index reversal is an order isomorphism onto the strongly-stable family,
        # so meets map to meets and joins to joins
        n = poset.nvars
        mapped = _borel_bound(dual_rename(m, n), dual_rename(mp, n), want_join)
        return dual_rename(mapped, n)
    # stable family: lattice structure holds degreewise only
    if poset.degree is None:
        raise ValueError("meet/join in the stable family needs a fixed degree")
    n = poset.nvars or max(m.max_support(), mp.max_support(), 1)
    if want_join:
        return join_stable(m, mp, n, poset.degree)
    return meet_stable(m, mp, n, poset.degree)


def _borel_bound(m, mp, want_join):
    a, b = partial_sums(m), partial_sums(mp)
    pick = max if want_join else min
    span = max(len(a.prefix), len(b.prefix))
    prefix = tuple(pick(a.value_at(i), b.value_at(i)) for i in range(1, span + 1))
    return monomial_from_partial_sums(PartialSumSequence(prefix, pick(a.tail, b.tail)))


def _check_stable_args(m, mp, nvars, degree):
    for x in (m, mp):
        if x.max_support() > nvars or x.degree() != degree:
            raise GroundSetError(f"{x} is not a degree-{degree} monomial in {nvars} variables")


def meet_stable(m, mp, nvars, degree):
    """Greatest lower bound in the stable order on fixed-degree monomials.

    Case split on the last variable: recurse when neither uses it; when both
    do, strip it, take a gcd, and pad back to full degree with the last
    variable.  In the mixed case every common lower bound uses the last
    variable, and stripping it leaves ordinary divisibility, so the meet is
    the largest divisor of the stripped side that still sits below the free
    side once padded back to full degree with the next variable down.
    """
    _check_stable_args(m, mp, nvars, degree)
    return _meet_stable(m, mp, nvars)


def _strip_top(m, n):
    return Monomial(m.exps[: n - 1])


def _pad_with_top(w, nvars, degree):
    exps = w.exponent_vector(nvars)
    exps[nvars - 1] += degree - w.degree()
    return Monomial(exps)


def _divisors(m):
    out = [Monomial(())]
    for i in range(1, m.max_support() + 1):
        grown = []
        for w in out:
            cur = w
            grown.append(cur)
            for _ in range(m.exponent(i)):
                cur = cur.times_var(i)
                grown.append(cur)
        out = grown
    return out


def _stable_leq(m, mp, n):
    """Comparability in the stable order by the same case split as the meet
    (no reachability tables): on the divisible block it is divisibility of
    the stripped parts, and a divisible monomial sits below a free one
    exactly when its stripped part, padded back to full degree with the next
    variable down, does."""
    if m == mp:
        return True
    if n <= 1:
        return False
    if n == 2:
        return m.exponent(2) > mp.exponent(2)
    em, ep = m.exponent(n), mp.exponent(n)
    if em and ep:
        return _strip_top(m, n).divides(_strip_top(mp, n))
    if not em and not ep:
        return _stable_leq(m, mp, n - 1)
    if not em:
        # nothing free of the last variable sits below the divisible block
        return False
    w = _strip_top(m, n)
    return _stable_leq(_pad_with_top(w, n - 1, m.degree()), mp, n - 1)


def _meet_stable(m, mp, n):
    if m == mp:
        return m
    if n <= 1:
        return m
    if n == 2:
        # a chain: the larger last exponent sits lower
        return m if m.exponent(2) >= mp.exponent(2) else mp
    em, ep = m.exponent(n), mp.exponent(n)
    if em == 0 and ep == 0:
        return _meet_stable(m, mp, n - 1)
    degree = m.degree()
    if em > 0 and ep > 0:
        g = _strip_top(m, n).gcd(_strip_top(mp, n))
        return Monomial(g.exponent_vector(n - 1) + [degree - g.degree()])
    free, divisible = (m, mp) if em == 0 else (mp, m)
    stripped = _strip_top(divisible, n)
    liftable = [
        w
        for w in _divisors(stripped)
        if _stable_leq(_pad_with_top(w, n - 1, degree), free, n - 1)
    ]
    g = max(liftable, key=lambda w: (w.degree(), w.exps))
    if not all(w.divides(g) for w in liftable):
        raise NotLatticeError(f"{m} and {mp} lack a unique meet")
    return Monomial(g.exponent_vector(n - 1) + [degree - g.degree()])


def join_stable(m, mp, nvars, degree):
    """Least upper bound in the stable order: fold the meet over all minimal
    common upper bounds read off the reachability table."""
    _check_stable_args(m, mp, nvars, degree)
    table = _stable_context(nvars, degree)
    common = table.up[table.index[m]] & table.up[table.index[mp]]
    down = table.down_masks()
    minimal = [k for k in _iter_bits(common) if down[k] & common == 1 << k]
    out = table.vertices[minimal[0]]
    for k in minimal[1:]:
        out = _meet_stable(out, table.vertices[k], nvars)
    return out


def _meet_join_tables(h):
    """All pairwise meets and joins by bitmask scans; raises NotLatticeError."""
    n = len(h)
    up, down = h.up_masks(), h.down_masks()
    meets = [[0] * n for _ in range(n)]
    joins = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            common = down[i] & down[j]
            best = [k for k in _iter_bits(common) if up[k] & common == 1 << k]
            if len(best) != 1:
                raise NotLatticeError(f"{h.vertices[i]} and {h.vertices[j]} lack a unique meet")
            meets[i][j] = meets[j][i] = best[0]
            common = up[i] & up[j]
            best = [k for k in _iter_bits(common) if down[k] & common == 1 << k]
            if len(best) != 1:
                raise NotLatticeError(f"{h.vertices[i]} and {h.vertices[j]} lack a unique join")
            joins[i][j] = joins[j][i] = best[0]
    return meets, joins


def check_distributive(h):
    """Test a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) over all vertex triples.

    Returns (True, None) or (False, first violating triple of monomials).
    """
    meets, joins = _meet_join_tables(h)
    n = len(h)
    for a in range(n):
        row = meets[a]
        for b in range(n):
            for c in range(n):
                if row[joins[b][c]] != joins[row[b]][row[c]]:
                    return False, (h.vertices[a], h.vertices[b], h.vertices[c])
    return True, None


def find_n5(h):
    """Search for a pentagon sublattice (bottom, a, b, c, top) with b < c and a
    incomparable to both; returns None when the lattice is modular."""
    meets, joins = _meet_join_tables(h)
    n = len(h)
    for a in range(n):
        for b in range(n):
            if b == a or h.leq_indices(a, b) or h.leq_indices(b, a):
                continue
            for c in range(n):
                if c in (a, b) or not h.leq_indices(b, c):
                    continue
                if h.leq_indices(a, c) or h.leq_indices(c, a):
                    continue
                if meets[a][b] == meets[a][c] and joins[a][b] == joins[a][c]:
                    verts = h.vertices
                    return (verts[meets[a][b]], verts[a], verts[b], verts[c], verts[joins[a][b]])
    return None


def _longest_path_ranks(h):
    lowers = [[] for _ in h.vertices]
    for lo, hi in h.covers:
        lowers[hi].append(lo)
    ranks = [0] * len(h.vertices)
    graph = {i: lowers[i] for i in range(len(h.vertices))}
    for i in TopologicalSorter(graph).static_order():
        if lowers[i]:
            ranks[i] = 1 + max(ranks[j] for j in lowers[i])
    return ranks


def rank_sizes(h):
    """Vertex counts per rank of a graded diagram (rank 0 at the bottom)."""
    ranks = _longest_path_ranks(h)
    for lo, hi in h.covers:
        if ranks[hi] - ranks[lo] != 1:
            raise NotGradedError(f"cover {h.vertices[lo]} < {h.vertices[hi]} skips a rank")
    has_upper = {lo for lo, _ in h.covers}
    top_ranks = {ranks[i] for i in range(len(h)) if i not in has_upper}
    if len(top_ranks) > 1:
        raise NotGradedError("maximal chains end at different heights")
    counts = [0] * (max(ranks, default=0) + 1)
    for r in ranks:
        counts[r] += 1
    return counts


def height_width(h):
    """(length of a longest chain, size of a largest antichain).

    The width is exact: by Dilworth's theorem it equals the number of vertices
    minus a maximum matching in the bipartite strict-comparability graph.
    """
    ranks = _longest_path_ranks(h)
    height = max(ranks, default=0)

    n = len(h)
    up = h.up_masks()
    adjacency = [list(_iter_bits(up[i] & ~(1 << i))) for i in range(n)]
    match_right = [-1] * n

    def augment(u, visited):
        for v in adjacency[u]:
            if v in visited:
                continue
            visited.add(v)
            if match_right[v] == -1 or augment(match_right[v], visited):
                match_right[v] = u
                return True
        return False

    matched = sum(1 for u in range(n) if augment(u, set()))
    return height, n - matched


@dataclass(frozen=True)
class GaussianPolynomial:
    """A Gaussian binomial coefficient as an explicit coefficient vector."""

    a: int
    b: int
    coefficients: tuple[int, ...]

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)


def gaussian(a, b):
    """Gaussian binomial [a+b choose a] by the Pascal-type recurrence
    P(a,b) = P(a-1,b) + q^a * P(a,b-1); counts partitions in an a-by-b box."""
    if a < 0 or b < 0:
        raise ValueError("gaussian(a, b) needs a, b >= 0")
    previous_row = [[1]] * (b + 1)  # row i = 0
    for i in range(1, a + 1):
        row = [[1]]
        for j in range(1, b + 1):
            upper = previous_row[j]
            left = row[j - 1]
            size = i * j + 1
            coeffs = [0] * size
            for k, v in enumerate(upper):
                coeffs[k] += v
            for k, v in enumerate(left):
                coeffs[k + i] += v
            row.append(coeffs)
        previous_row = row
    return GaussianPolynomial(a, b, tuple(previous_row[b]))
