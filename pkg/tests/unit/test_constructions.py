"""
Tests for the M(a,b,c), chain, infinite-delta and Puiseux constructions
"""

from fractions import Fraction

import pytest

from engines.constructions import ConstructionFactory
from engines.factor_engine import FactorEngine
from engines.invariants import InvariantCalculator
from models.constructions import MabcSpec, NoasymSpec
from models.errors import InvalidIndex, InvalidLevel, InvalidSpec


@pytest.mark.unit
class TestMabcFamily:
    """Truncations of M(a,b,c)"""

    @pytest.fixture
    def half_spec(self):
        return MabcSpec(a=1, b=3, c=Fraction(1, 2), truncation=5)

    def test_chain_shape(self, half_spec):
        for i in range(1, 6):
            assert half_spec.k(i) == i
            assert half_spec.chain_exponents(i) == tuple(range(i, 2 * i + 1)) + (3 * i,)

    def test_atom_names(self, half_spec):
        monoid = ConstructionFactory.mabc_presentation(half_spec)
        assert monoid.atom_count == sum(i + 2 for i in range(1, 6))
        assert monoid.name_of(0) == "q_{1,1}"

    @pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_engine_matches_closed_form(self, half_spec, i, t):
        engine = ConstructionFactory.mabc_power_lengthset(half_spec, i, t)
        closed = ConstructionFactory.mabc_closed_form(half_spec, i, t)
        assert engine.lengths == closed.lengths, f"i={i}, t={t}: {engine.lengths} != {closed.lengths}"

    def test_first_power_lengths(self, half_spec):
        lengths = ConstructionFactory.mabc_power_lengthset(half_spec, 3, 1).lengths
        assert lengths == (3, 4, 5, 6, 9)

    def test_validation(self):
        with pytest.raises(InvalidSpec):
            ConstructionFactory.mabc_presentation(MabcSpec(a=2, b=2, c=Fraction(1, 2)))
        with pytest.raises(InvalidSpec):
            ConstructionFactory.mabc_presentation(MabcSpec(a=1, b=3, c=Fraction(3, 2)))
        spec = MabcSpec(a=1, b=3, c=Fraction(1, 2), truncation=2)
        with pytest.raises(InvalidIndex):
            ConstructionFactory.mabc_power_element(spec, 3)
        with pytest.raises(InvalidIndex):
            ConstructionFactory.mabc_power_element(spec, 1, 0)


@pytest.mark.unit
class TestChainMonoids:
    """a_1^3 = a_2^4 = ... = a_i^(2i)"""

    @pytest.mark.parametrize("i", [3, 4, 5])
    def test_first_atom_cubed(self, i):
        monoid = ConstructionFactory.chain_monoid(i)
        element = (3,) + (0,) * (i - 1)
        stats = InvariantCalculator.element_stats(monoid, element)
        assert stats.lengths == (3,) + tuple(range(4, 2 * i + 1, 2))
        assert stats.ld == Fraction(i - 1, 2 * i - 3)

    def test_names_and_index(self):
        monoid = ConstructionFactory.chain_monoid(3)
        assert monoid.atom_names == ("a_1", "a_2", "a_3")
        with pytest.raises(InvalidIndex):
            ConstructionFactory.chain_monoid(2)


@pytest.mark.unit
class TestInfiniteDeltaFamily:
    """<2i, 3i, 6i+1>"""

    @pytest.mark.parametrize("i", [2, 3, 4])
    def test_witness(self, i):
        monoid = ConstructionFactory.infinite_delta_member(i)
        witness = ConstructionFactory.infinite_delta_witness(i)
        stats = InvariantCalculator.element_stats(monoid, witness)
        assert stats.lengths == (i,) + tuple(range(2 * i + 1, 3 * i + 1))
        assert stats.ld == Fraction(1, 2)

    def test_index_range(self):
        with pytest.raises(InvalidIndex):
            ConstructionFactory.infinite_delta_member(1)


@pytest.mark.unit
class TestNoasymMonoid:
    """Puiseux monoid whose powers have no limiting length density"""

    def test_levels(self):
        base = ConstructionFactory.noasym_monoid(NoasymSpec(level=0))
        assert base.atom_count == 3
        extended = ConstructionFactory.noasym_monoid(NoasymSpec(level=1))
        assert extended.atoms[0] == Fraction(23208, 72073)
        with pytest.raises(InvalidLevel):
            ConstructionFactory.noasym_monoid(NoasymSpec(level=2))

    def test_early_checkpoints(self):
        points = ConstructionFactory.noasym_series(NoasymSpec(level=0), [100, 99])
        assert [p.n for p in points] == [99, 100], "Checkpoints come back ascending"
        assert points[0].ld == 1
        assert points[1].ld < Fraction(1, 2)
        assert (points[1].min_len, points[1].max_len, points[1].size) == (500, 1201, 102)

    def test_checkpoints_must_be_positive(self):
        with pytest.raises(InvalidIndex):
            ConstructionFactory.noasym_series(NoasymSpec(level=0), [0])

    def test_base_is_in_monoid(self):
        monoid = ConstructionFactory.noasym_monoid(NoasymSpec(level=0))
        assert FactorEngine.length_set(monoid, Fraction(8)).min_len >= 1
