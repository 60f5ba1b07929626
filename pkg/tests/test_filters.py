"""Tests for filters: recognition, counting, enumeration, and ideals."""
from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

import pytest

from stableorders.filters import (
    borel_closure,
    boundary,
    catalan,
    count_filters,
    enumerate_filters,
    filter_count_three_vars,
    filter_layers,
    ideal_contains,
    interior,
    is_borel_ideal,
    is_filter,
    is_filter_by_layers,
    is_stable_ideal,
    minimal_generators,
    stable_closure,
    stable_filter_counts,
    weighted_walk_count,
)
from stableorders.lattice import CapExceededError, build_hasse
from stableorders.monomials import ONE, Monomial
from stableorders.orders import GroundSetError, PosetId, ground_monomials, leq

M = Monomial.parse


def parse_set(*texts):
    return frozenset(M(t) for t in texts)


def local_filters(poset):
    """All upward-closed subsets by scanning every subset against leq."""
    ground = ground_monomials(poset)
    out = []
    for bits in range(1 << len(ground)):
        members = frozenset(g for i, g in enumerate(ground) if bits >> i & 1)
        if all(
            mp in members
            for m in members
            for mp in ground
            if leq(poset, m, mp)
        ):
            out.append(members)
    return out


class TestIsFilter:
    def test_basic_examples(self):
        a22 = PosetId.parse("A[n=2,d=2]")
        assert is_filter(parse_set("x1^2"), a22)
        assert is_filter(parse_set(), a22)
        assert is_filter(parse_set("x2^2", "x1*x2", "x1^2"), a22)
        assert not is_filter(parse_set("x2^2"), a22)

    def test_families_disagree(self):
        members = parse_set("x2*x3", "x2^2", "x1*x2", "x1^2")
        assert not is_filter(members, PosetId.parse("A[n=3,d=2]"))  # misses x1*x3
        assert is_filter(members, PosetId.parse("B[n=3,d=2]"))

    def test_divisibility_and_dual(self):
        assert is_filter(parse_set("x1*x2", "x1^2*x2", "x1*x2^2"), PosetId.parse("D[n=2,d=3]"))
        assert not is_filter(parse_set("x1*x2"), PosetId.parse("D[n=2,d=3]"))
        assert is_filter(parse_set("x2^2"), PosetId.parse("C[n=2,d=2]"))
        assert not is_filter(parse_set("x1^2"), PosetId.parse("C[n=2,d=2]"))

    def test_errors(self):
        with pytest.raises(GroundSetError):
            is_filter(parse_set("x1"), PosetId.parse("A[n=2,d=2]"))
        with pytest.raises(ValueError):
            is_filter(parse_set("x1"), PosetId.parse("A[n=2]"))

    @pytest.mark.parametrize("poset_text", ["A[n=3,d=2]", "B[n=3,d=2]", "D[n=2,d=2]"])
    def test_matches_subset_scan(self, poset_text):
        poset = PosetId.parse(poset_text)
        ground = ground_monomials(poset)
        expected = set(local_filters(poset))
        for bits in range(1 << len(ground)):
            members = frozenset(g for i, g in enumerate(ground) if bits >> i & 1)
            assert is_filter(members, poset) == (members in expected)


class TestInterior:
    def test_two_variable_example(self):
        members = parse_set("x1^2", "x1*x2")
        assert interior(members, 2) == parse_set("x1^2")
        assert boundary(members, 2) == parse_set("x1*x2")

    def test_full_degree_slice_is_its_own_interior(self):
        members = frozenset(ground_monomials(PosetId.parse("A[n=3,d=2]")))
        assert interior(members, 3) == members
        assert boundary(members, 3) == frozenset()

    def test_interior_is_inside(self):
        rng = random.Random(7)
        pool = ground_monomials(PosetId.parse("A[n=3,d=3]"))
        for _ in range(50):
            members = frozenset(m for m in pool if rng.random() < 0.5)
            inner = interior(members, 3)
            assert inner <= members
            assert boundary(members, 3) == members - inner


class TestLayers:
    def test_slicing(self):
        members = parse_set("x2*x3", "x2^2", "x1*x3", "x1*x2", "x1^2")
        layers = filter_layers(members, 3, 2)
        assert layers == [
            parse_set("x2^2", "x1*x2", "x1^2"),
            parse_set("x2", "x1"),
            frozenset(),
        ]

    def test_rejects_mixed_degrees(self):
        with pytest.raises(GroundSetError):
            filter_layers(parse_set("x1", "x1*x2"), 2, 2)

    def test_needs_three_variables(self):
        with pytest.raises(ValueError):
            is_filter_by_layers(parse_set("x1^2"), 2, 2)

    @pytest.mark.parametrize(("nvars", "degree"), [(3, 3), (4, 2)])
    def test_layer_test_agrees_on_all_filters(self, nvars, degree):
        h = build_hasse(PosetId.parse(f"A[n={nvars},d={degree}]"))
        for members in enumerate_filters(h):
            assert is_filter_by_layers(members, nvars, degree)

    @pytest.mark.parametrize(("nvars", "degree"), [(3, 3), (4, 2)])
    def test_layer_test_agrees_on_random_subsets(self, nvars, degree):
        poset = PosetId.parse(f"A[n={nvars},d={degree}]")
        pool = ground_monomials(poset)
        rng = random.Random(13)
        for _ in range(200):
            members = frozenset(m for m in pool if rng.random() < rng.choice((0.3, 0.6, 0.9)))
            assert is_filter_by_layers(members, nvars, degree) == is_filter(members, poset)


class TestCounting:
    @pytest.mark.parametrize(
        "poset_text",
        ["A[n=3,d=2]", "B[n=3,d=2]", "D[n=2,d=2]", "A[n=2,d=4]", "C[n=3,d=2]"],
    )
    def test_count_and_enumeration_match_subset_scan(self, poset_text):
        poset = PosetId.parse(poset_text)
        h = build_hasse(poset)
        expected = local_filters(poset)
        got = list(enumerate_filters(h))
        assert len(got) == len(set(got)) == count_filters(h) == len(expected)
        assert set(got) == set(expected)
        histogram = Counter(len(f) for f in expected)
        for v in range(len(h) + 1):
            assert count_filters(h, v) == histogram.get(v, 0)

    def test_known_totals(self):
        assert count_filters(build_hasse(PosetId.parse("A[n=3,d=2]"))) == 8
        assert count_filters(build_hasse(PosetId.parse("B[n=3,d=2]"))) == 9
        assert count_filters(build_hasse(PosetId.parse("D[n=2,d=2]"))) == catalan(4)

    def test_trivial_cardinalities(self):
        h = build_hasse(PosetId.parse("A[n=3,d=3]"))
        assert count_filters(h, 0) == 1
        assert count_filters(h, len(h)) == 1
        assert count_filters(h, len(h) + 5) == 0
        assert count_filters(h, -1) == 0

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_random_pivots_change_nothing(self, seed):
        for poset_text in ("A[n=3,d=3]", "B[n=3,d=3]"):
            h = build_hasse(PosetId.parse(poset_text))
            baseline = count_filters(h)
            assert count_filters(h, pivot_rng=random.Random(seed)) == baseline
            assert count_filters(h, 4, pivot_rng=random.Random(seed)) == count_filters(h, 4)

    def test_enumeration_by_cardinality(self):
        h = build_hasse(PosetId.parse("B[n=3,d=2]"))
        sized = list(enumerate_filters(h, 4))
        assert all(len(f) == 4 for f in sized)
        assert {frozenset(str(m) for m in f) for f in sized} == {
            frozenset({"x1^2", "x1*x2", "x1*x3", "x2^2"}),
            frozenset({"x1^2", "x1*x2", "x2^2", "x2*x3"}),
        }

    def test_enumeration_cap(self):
        h = build_hasse(PosetId.parse("A[n=3,d=3]"))
        with pytest.raises(CapExceededError):
            list(enumerate_filters(h, cap=3))
        assert len(list(enumerate_filters(h, cap=16))) == 16


class TestCatalan:
    def test_values(self):
        assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            catalan(-1)


class TestThreeVariableRecurrence:
    def test_degree_two_profile(self):
        assert [filter_count_three_vars(2, v) for v in range(7)] == [1, 1, 1, 2, 1, 1, 1]

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_matches_filter_counts(self, d):
        h = build_hasse(PosetId.parse(f"A[n=3,d={d}]"))
        top = (d + 1) * (d + 2) // 2
        for v in range(top + 1):
            assert filter_count_three_vars(d, v) == count_filters(h, v)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
    def test_matches_distinct_part_subsets(self, d):
        # independent model: v must be a sum of distinct integers from 1..d+1
        parts = range(1, d + 2)
        sizes = Counter(
            sum(chosen)
            for r in range(d + 2)
            for chosen in combinations(parts, r)
        )
        top = (d + 1) * (d + 2) // 2
        for v in range(top + 1):
            assert filter_count_three_vars(d, v) == sizes.get(v, 0)

    def test_totals_double(self):
        for d in range(1, 9):
            top = (d + 1) * (d + 2) // 2
            assert sum(filter_count_three_vars(d, v) for v in range(top + 1)) == 2 ** (d + 1)

    def test_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            filter_count_three_vars(0, 0)


class TestWeightedWalks:
    def test_full_region_row(self):
        assert [weighted_walk_count(1, 0, 3, w) for w in range(4)] == [1, 2, 1, 1]

    def test_base_rows(self):
        assert weighted_walk_count(3, 2, 0, 2) == 1
        assert weighted_walk_count(3, 2, 0, 1) == 0
        assert [weighted_walk_count(3, 1, 1, w) for w in range(5)] == [1, 1, 1, 1, 0]

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            weighted_walk_count(2, 3, 2, 0)
        with pytest.raises(ValueError):
            weighted_walk_count(2, -1, 2, 0)

    @pytest.mark.parametrize("e", [0, 1, 2, 3])
    def test_total_over_weights_is_catalan(self, e):
        top = (e + 1) * (e + 2) // 2
        total = sum(weighted_walk_count(e, 0, e + 2, w) for w in range(top + 1))
        assert total == catalan(e + 2)

    @pytest.mark.parametrize("e", [0, 1, 2, 3])
    def test_weights_count_staircase_filters(self, e):
        h = build_hasse(PosetId.parse(f"D[n=2,d={e}]"))
        top = (e + 1) * (e + 2) // 2
        for w in range(top + 1):
            assert weighted_walk_count(e, 0, e + 2, w) == count_filters(h, w)


class TestStableCounts:
    def test_small_profiles(self):
        assert stable_filter_counts(0) == (2, (1, 1))
        assert stable_filter_counts(1) == (4, (1, 1, 1, 1))
        assert stable_filter_counts(2) == (9, (1, 1, 1, 2, 2, 1, 1))

    @pytest.mark.parametrize("d", range(7))
    def test_totals_are_catalan_partial_sums(self, d):
        total, by_size = stable_filter_counts(d)
        assert total == sum(catalan(i) for i in range(d + 2))
        assert sum(by_size) == total

    @pytest.mark.parametrize("d", [0, 1, 2, 3])
    def test_matches_enumeration(self, d):
        h = build_hasse(PosetId.parse(f"B[n=3,d={d}]"))
        histogram = Counter(len(f) for f in enumerate_filters(h))
        _, by_size = stable_filter_counts(d)
        assert list(by_size) == [histogram.get(v, 0) for v in range(len(by_size))]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            stable_filter_counts(-1)


class TestIdeals:
    def test_minimal_generators(self):
        gens = [M("x1^2"), M("x1^2*x2"), M("x2*x3"), M("x1^2")]
        assert minimal_generators(gens) == (M("x2*x3"), M("x1^2"))

    def test_ideal_contains(self):
        gens = (M("x2*x3"), M("x1^2"))
        assert ideal_contains(gens, M("x1^2*x3"))
        assert ideal_contains(gens, M("x2*x3^4"))
        assert not ideal_contains(gens, M("x1*x3"))
        assert not ideal_contains(gens, ONE)

    def test_borel_closure(self):
        closed = borel_closure([M("x2*x3")])
        assert closed == (M("x2*x3"), M("x2^2"), M("x1*x3"), M("x1*x2"), M("x1^2"))
        assert is_borel_ideal(closed)
        assert not is_borel_ideal([M("x2*x3")])

    def test_stable_closure(self):
        assert stable_closure([M("x2^2")]) == (M("x2^2"), M("x1*x2"), M("x1^2"))
        assert is_stable_ideal([M("x2^2"), M("x1*x2"), M("x1^2")])
        assert not is_stable_ideal([M("x2^2")])

    def test_stable_closure_is_smaller(self):
        gens = [M("x2*x3")]
        assert set(stable_closure(gens)) < set(borel_closure(gens))

    def test_closed_generators_give_degreewise_filters(self):
        gens = borel_closure([M("x2*x3")])
        for d in (2, 3, 4):
            poset = PosetId.parse(f"A[n=3,d={d}]")
            slice_ = frozenset(
                m for m in ground_monomials(poset) if ideal_contains(gens, m)
            )
            assert is_filter(slice_, poset)
        open_slice = frozenset(
            m
            for m in ground_monomials(PosetId.parse("A[n=3,d=3]"))
            if ideal_contains([M("x2*x3")], m)
        )
        assert not is_filter(open_slice, PosetId.parse("A[n=3,d=3]"))

    def test_closure_is_idempotent_and_contains_input(self):
        rng = random.Random(11)
        pool = ground_monomials(PosetId.parse("D[n=3,d=3]"))
        for _ in range(25):
            gens = [rng.choice(pool) for _ in range(3)]
            for close in (borel_closure, stable_closure):
                closed = close(gens)
                assert close(closed) == closed
                assert all(ideal_contains(closed, g) for g in gens)
