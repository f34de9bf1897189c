"""
Property-based tests for length sets, densities, distances and catenary degrees
"""

from collections import deque
from fractions import Fraction
from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from engines.factor_engine import FactorEngine
from engines.invariants import InvariantCalculator
from engines.monoid_core import MonoidBuilder
from utils.rational_utils import RationalUtils

generator_lists = st.lists(st.integers(2, 12), min_size=2, max_size=4, unique=True).filter(
    lambda gens: reduce(gcd, gens) == 1
)
small_vectors = st.lists(st.integers(0, 6), min_size=4, max_size=4).map(tuple)

PROPERTY_SETTINGS = settings(max_examples=60, deadline=None)


def is_interval(lengths):
    return list(lengths) == list(range(lengths[0], lengths[-1] + 1))


def naive_catenary(vectors):
    """Least N whose distance-at-most-N graph on the factorizations is connected"""
    n = len(vectors)
    if n <= 1:
        return 0
    for threshold in range(max(map(sum, vectors)) + 1):
        seen = {0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j not in seen and FactorEngine.distance(vectors[i], vectors[j]) <= threshold:
                    seen.add(j)
                    queue.append(j)
        if len(seen) == n:
            return threshold
    raise AssertionError("distance graph never connects")


@pytest.mark.unit
class TestLengthSetProperties:
    """Length-set oracles and density bounds on numerical semigroups"""

    @PROPERTY_SETTINGS
    @given(generator_lists, st.integers(0, 120))
    def test_oracle_matches_enumeration(self, gens, x):
        monoid = MonoidBuilder.make_numerical(gens)
        if not MonoidBuilder.contains(monoid, x):
            assert FactorEngine.length_mask(monoid, x) == 0
            return
        enumerated = FactorEngine.factorizations(monoid, x).lengths()
        assert list(FactorEngine.length_set(monoid, x).lengths) == enumerated

    @PROPERTY_SETTINGS
    @given(generator_lists, st.integers(1, 150))
    def test_density_sandwich(self, gens, x):
        monoid = MonoidBuilder.make_numerical(gens)
        if not MonoidBuilder.contains(monoid, x):
            return
        stats = InvariantCalculator.element_stats(monoid, x)
        if stats.ld is None:
            return
        low, high = Fraction(1, max(stats.delta)), Fraction(1, min(stats.delta))
        assert low <= stats.ld <= high, f"ld {stats.ld} outside [{low}, {high}]"
        assert (stats.ld == low) == (len(stats.delta) == 1)
        assert (stats.ld == high) == (len(stats.delta) == 1)
        assert (stats.ld == 1) == is_interval(stats.lengths)

    @PROPERTY_SETTINGS
    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any),
            min_size=1,
            max_size=4,
            unique=True,
        ),
        st.tuples(st.integers(0, 8), st.integers(0, 8)),
    )
    def test_affine_oracle_matches_enumeration(self, vectors, target):
        monoid = MonoidBuilder.make_affine(vectors)
        mask = FactorEngine.length_mask(monoid, target)
        if mask == 0:
            assert not MonoidBuilder.contains(monoid, target)
            return
        enumerated = FactorEngine.factorizations(monoid, target).lengths()
        assert list(FactorEngine.length_set(monoid, target).lengths) == enumerated


@pytest.mark.unit
class TestDistanceProperties:
    """Factorization distance is a metric; catenary matches a threshold search"""

    @PROPERTY_SETTINGS
    @given(small_vectors, small_vectors, small_vectors)
    def test_metric_axioms(self, z, y, w):
        d = FactorEngine.distance
        assert d(z, z) == 0
        assert d(z, y) == d(y, z)
        assert (d(z, y) == 0) == (z == y)
        assert d(z, w) <= d(z, y) + d(y, w)

    @PROPERTY_SETTINGS
    @given(generator_lists, st.integers(1, 90))
    def test_catenary_matches_threshold_search(self, gens, x):
        monoid = MonoidBuilder.make_numerical(gens)
        if not MonoidBuilder.contains(monoid, x):
            return
        fs = FactorEngine.factorizations(monoid, x)
        if len(fs) > 12:
            return
        assert InvariantCalculator.catenary_of_set(fs) == naive_catenary(fs.exponent_vectors())


@pytest.mark.unit
class TestCoproductProperties:
    """Length sets of direct sums are set sums; densities respect the mediant"""

    @PROPERTY_SETTINGS
    @given(generator_lists, generator_lists, st.integers(1, 80), st.integers(1, 80))
    def test_sumset_and_mediant(self, first_gens, second_gens, u, v):
        first = MonoidBuilder.make_numerical(first_gens)
        second = MonoidBuilder.make_numerical(second_gens)
        if not (MonoidBuilder.contains(first, u) and MonoidBuilder.contains(second, v)):
            return
        total = MonoidBuilder.direct_sum([first, second])

        left = FactorEngine.length_set(first, u).lengths
        right = FactorEngine.length_set(second, v).lengths
        combined = FactorEngine.length_set(total, (u, v)).lengths
        assert combined == tuple(sorted({a + b for a in left for b in right}))

        stats_u = InvariantCalculator.element_stats(first, u)
        stats_v = InvariantCalculator.element_stats(second, v)
        ld_u, ld_v = stats_u.ld, stats_v.ld
        if ld_u is None or ld_v is None:
            return
        ld = InvariantCalculator.element_stats(total, (u, v)).ld
        bound = RationalUtils.mediant(
            (stats_u.size - 1, stats_u.max_len - stats_u.min_len),
            (stats_v.size - 1, stats_v.max_len - stats_v.min_len),
        )
        assert ld >= bound, f"ld {ld} below the mediant {bound}"
        if ld_u == ld_v:
            assert ld >= ld_u
        else:
            assert ld > min(ld_u, ld_v), f"ld {ld} should exceed min({ld_u}, {ld_v})"


@pytest.mark.unit
class TestScanProperties:
    """Single-gap scans and membership closure"""

    @PROPERTY_SETTINGS
    @given(generator_lists)
    def test_single_gap_fixes_every_density(self, gens):
        monoid = MonoidBuilder.make_numerical(gens)
        scan = InvariantCalculator.delta_scan(monoid, 60)
        if len(scan.delta) != 1:
            return
        d = scan.delta[0]
        for x in MonoidBuilder.scan_elements(monoid, 60):
            ld = InvariantCalculator.element_stats(monoid, x).ld
            assert ld is None or ld == Fraction(1, d), f"ld({x}) = {ld} with delta {{{d}}}"

    @PROPERTY_SETTINGS
    @given(generator_lists, st.integers(0, 80), st.integers(0, 80))
    def test_membership_is_closed_under_addition(self, gens, x, y):
        monoid = MonoidBuilder.make_numerical(gens)
        if MonoidBuilder.contains(monoid, x) and MonoidBuilder.contains(monoid, y):
            assert MonoidBuilder.contains(monoid, x + y)
        if not MonoidBuilder.contains(monoid, x + y):
            assert not (MonoidBuilder.contains(monoid, x) and MonoidBuilder.contains(monoid, y))

    @PROPERTY_SETTINGS
    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any),
            min_size=1,
            max_size=3,
            unique=True,
        ),
        st.tuples(st.integers(0, 6), st.integers(0, 6)),
        st.tuples(st.integers(0, 6), st.integers(0, 6)),
    )
    def test_affine_membership_is_closed_under_addition(self, vectors, u, v):
        monoid = MonoidBuilder.make_affine(vectors)
        if MonoidBuilder.contains(monoid, u) and MonoidBuilder.contains(monoid, v):
            assert MonoidBuilder.contains(monoid, MonoidBuilder.add_elements(monoid, u, v))
