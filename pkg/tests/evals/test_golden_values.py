"""
Golden-value reproduction of published length-density results
"""

from fractions import Fraction
from math import lcm

import pytest

from engines.block_monoid import BlockMonoidUtils
from engines.constructions import ConstructionFactory
from engines.factor_engine import FactorEngine
from engines.invariants import InvariantCalculator
from engines.monoid_core import MonoidBuilder
from models.constructions import MabcSpec, NoasymSpec
from models.group import FiniteAbelianGroup


@pytest.fixture(scope="module")
def mcnugget():
    return MonoidBuilder.make_numerical([6, 9, 20])


@pytest.mark.eval
class TestMcNuggetMonoid:
    """<6, 9, 20>"""

    def test_delta_set_and_density(self, mcnugget):
        assert InvariantCalculator.delta_scan(mcnugget, 400).delta == (1, 2, 3, 4)
        report = InvariantCalculator.ld_search(mcnugget, 400)
        assert report.minimum_ld == Fraction(4, 7)
        assert report.witness == 60

    @pytest.mark.parametrize("n", range(1, 11))
    def test_powers_of_sixty(self, mcnugget, n):
        stats = InvariantCalculator.power_stats(mcnugget, 60, n)
        expected = tuple(k for k in range(3 * n, 10 * n + 1) if k not in (3 * n + 1, 3 * n + 2, 3 * n + 3))
        assert stats.lengths == expected, f"L(60*{n}) = {stats.lengths}"
        assert stats.ld == Fraction(7 * n - 3, 7 * n)

    def test_density_near_one_for_large_elements(self, mcnugget):
        for x in range(3000, 3101):
            ld = InvariantCalculator.element_stats(mcnugget, x).ld
            assert ld > Fraction(9, 10), f"ld({x}) = {ld}"


@pytest.mark.eval
class TestBettiCounterexample:
    """<20, 28, 42, 73>: the minimum density is not reached at a Betti element"""

    @pytest.fixture(scope="class")
    def monoid(self):
        return MonoidBuilder.make_numerical([20, 28, 42, 73])

    def test_betti_elements(self, monoid):
        betti = InvariantCalculator.betti_scan(monoid, 300)
        assert betti == [84, 140, 146]
        lengths = [FactorEngine.length_set(monoid, b).lengths for b in betti]
        assert lengths == [(2, 3), (4, 5, 7), (2, 4, 5)]

    def test_minimum_off_betti(self, monoid):
        assert FactorEngine.length_set(monoid, 202).lengths == (4, 6, 7, 9)
        outcome = InvariantCalculator.betti_ld_test(monoid, 300)
        assert outcome.minimum_ld == Fraction(3, 5)
        assert not outcome.attained_at_betti


@pytest.mark.eval
class TestAffineDecreasingDensity:
    """<4, 7> and an affine semigroup on top of it"""

    def test_lengths_and_densities(self):
        numerical = MonoidBuilder.make_numerical([4, 7])
        affine = MonoidBuilder.make_affine([(4, 0, 0), (7, 0, 0), (0, 3, 0), (0, 1, 1), (0, 0, 3)])
        previous = None
        for n in range(1, 9):
            base = tuple(range(4 * n, 7 * n + 1, 3))
            assert FactorEngine.length_set(numerical, 28 * n).lengths == base

            stats = InvariantCalculator.element_stats(affine, (28 * n, 3, 3))
            assert stats.lengths == tuple(sorted({b + e for b in base for e in (2, 3)}))
            assert stats.ld == Fraction(2 * n + 1, 3 * n + 1), f"n={n}: ld {stats.ld}"
            if previous is not None:
                assert stats.ld < previous, "Densities must strictly decrease"
            previous = stats.ld


@pytest.mark.eval
class TestInfiniteDeltaFamily:
    """<2i, 3i, 6i+1> all have length density 1/2"""

    @pytest.mark.parametrize("i", range(2, 7))
    def test_density_one_half(self, i):
        monoid = ConstructionFactory.infinite_delta_member(i)
        witness = ConstructionFactory.infinite_delta_witness(i)
        assert witness == i * (6 * i + 1)
        report = InvariantCalculator.ld_search(monoid, witness)
        assert report.minimum_ld == Fraction(1, 2)
        assert report.witness == witness
        assert report.witness_lengths == (i,) + tuple(range(2 * i + 1, 3 * i + 1))


@pytest.mark.eval
class TestChainMonoids:
    """Every scanned element of a chain monoid has gaps 1 or 2"""

    @pytest.mark.parametrize("i", [3, 4, 5])
    def test_chain(self, i):
        monoid = ConstructionFactory.chain_monoid(i)
        stats = InvariantCalculator.element_stats(monoid, (3,) + (0,) * (i - 1))
        assert stats.lengths == (3,) + tuple(range(4, 2 * i + 1, 2))
        assert stats.ld == Fraction(i - 1, 2 * i - 3)
        # a_1^3 sits in degree lcm of the exponents
        scan = InvariantCalculator.delta_scan(monoid, 2 * lcm(*ConstructionFactory.chain_exponents(i)))
        assert set(scan.delta) <= {1, 2}


@pytest.mark.eval
class TestBlockMonoids:
    """Block monoids over small groups"""

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
    def test_restricted_block(self, n):
        group = FiniteAbelianGroup(invariant_factors=(n,))
        monoid = BlockMonoidUtils.block_presentation(group, [(1,), (n - 1,)])
        assert monoid.atom_count == 3
        assert InvariantCalculator.element_stats(monoid, (n, n)).delta == (n - 2,)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_elementary_davenport(self, k):
        group = FiniteAbelianGroup(invariant_factors=(2,) * k)
        assert BlockMonoidUtils.davenport(group) == k + 1

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_cyclic_density(self, n):
        monoid = BlockMonoidUtils.block_presentation(FiniteAbelianGroup(invariant_factors=(n,)))
        report = InvariantCalculator.ld_search(monoid, 2 * n)
        assert report.minimum_ld == Fraction(1, n - 2)

    @pytest.mark.parametrize("k", [3, 4])
    def test_elementary_density(self, k):
        monoid = BlockMonoidUtils.block_presentation(FiniteAbelianGroup(invariant_factors=(2,) * k))
        report = InvariantCalculator.ld_search(monoid, 2 * (k + 1))
        assert report.minimum_ld == Fraction(1, k - 1)


@pytest.mark.eval
class TestMabcFamily:
    """M(1, 3, 1/2): elasticity 3 with densities tending to 1/2"""

    @pytest.fixture(scope="class")
    def spec(self):
        return MabcSpec(a=1, b=3, c=Fraction(1, 2), truncation=20)

    @pytest.mark.parametrize("i", range(1, 21))
    def test_chain_power(self, spec, i):
        lengths = ConstructionFactory.mabc_power_lengthset(spec, i)
        stats = InvariantCalculator.length_stats(lengths)
        assert stats.elasticity == 3
        assert stats.ld == Fraction(spec.k(i) + 1, 2 * i)
        assert Fraction(1, 2) < stats.ld <= Fraction(1, 2) + Fraction(1, 2 * i)


@pytest.mark.eval
class TestNoasymCheckpoints:
    """Multiples of 8 in the Puiseux monoid without asymptotic density"""

    def test_early_checkpoints(self):
        points = ConstructionFactory.noasym_series(NoasymSpec(level=0), [99, 100])
        assert points[0].ld == 1
        monoid = ConstructionFactory.noasym_monoid(NoasymSpec(level=0))
        lengths = FactorEngine.length_set(monoid, Fraction(800)).lengths
        assert lengths == tuple(range(500, 601)) + (1201,)
        assert points[1].ld < Fraction(1, 2)

    @pytest.mark.slow
    def test_level_one_oscillation(self):
        high, low = ConstructionFactory.noasym_series(NoasymSpec(level=1), [2900, 2901])
        assert (high.size, high.min_len, high.max_len) == (18230, 14500, 34829)
        assert high.ld == Fraction(18229, 20329)
        assert high.ld > Fraction(3, 4)
        assert low.ld < Fraction(1, 2), f"ld(8*2901) = {low.ld}"
