"""
Tests for finite abelian groups, zero-sum sequences and block monoids
"""

import pytest

from engines.block_monoid import BlockMonoidUtils
from engines.factor_engine import FactorEngine
from engines.invariants import InvariantCalculator
from engines.monoid_core import MonoidBuilder
from models.errors import DimensionMismatch, InvalidGroup, NotInMonoid, ParseError
from models.group import FiniteAbelianGroup, ZeroSumSequence
from utils.parsing_utils import SpecParser


def cyclic(n: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(invariant_factors=(n,))


@pytest.mark.unit
class TestGroups:
    """Invariant-factor normalisation and group arithmetic"""

    @pytest.mark.parametrize(
        "orders, expected",
        [
            ([5], (5,)),
            ([2, 3], (6,)),
            ([2, 2, 3], (2, 6)),
            ([4, 6], (2, 12)),
            ([1], ()),
        ],
    )
    def test_from_cyclic_factors(self, orders, expected):
        group = FiniteAbelianGroup.from_cyclic_factors(orders)
        assert group.invariant_factors == expected, f"{orders} normalised to {group.invariant_factors}"

    def test_invalid_factor(self):
        with pytest.raises(InvalidGroup):
            FiniteAbelianGroup.from_cyclic_factors([0])

    def test_parse_group(self):
        assert SpecParser.parse_group("Z2xZ2xZ3").invariant_factors == (2, 6)
        assert SpecParser.parse_group("trivial").order == 1
        with pytest.raises(ParseError):
            SpecParser.parse_group("Q8")

    def test_arithmetic(self):
        group = FiniteAbelianGroup(invariant_factors=(2, 6))
        assert group.add((1, 5), (1, 2)) == (0, 1)
        assert group.negate((1, 2)) == (1, 4)
        assert group.scale((1, 5), 3) == (1, 3)
        assert group.reduce((-1, 7)) == (1, 1)
        assert group.order == 12 and group.exponent == 6
        assert group.label() == "Z2xZ6"


@pytest.mark.unit
class TestZeroSumSequences:
    """Minimal zero-sum sequences and Davenport constants"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_cyclic_davenport(self, n):
        assert BlockMonoidUtils.davenport(cyclic(n)) == n

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_elementary_two_group_davenport(self, k):
        group = FiniteAbelianGroup(invariant_factors=(2,) * k)
        assert BlockMonoidUtils.davenport(group) == k + 1

    def test_atoms_of_z3(self):
        atoms = BlockMonoidUtils.zero_sum_atoms(cyclic(3))
        assert [a.multiplicities for a in atoms] == [
            (1, 0, 0),
            (0, 1, 1),
            (0, 3, 0),
            (0, 0, 3),
        ], "Atoms are ordered by length, then by descending multiplicities"
        for atom in atoms:
            assert BlockMonoidUtils.is_minimal_zero_sum(cyclic(3), atom.support, atom.multiplicities)

    def test_minimality(self):
        group = cyclic(4)
        support = ((1,), (2,), (3,))
        assert BlockMonoidUtils.is_minimal_zero_sum(group, support, (2, 1, 0))
        assert not BlockMonoidUtils.is_minimal_zero_sum(group, support, (1, 2, 1)), "1*3 is a proper zero-sum subsequence"
        assert not BlockMonoidUtils.is_minimal_zero_sum(group, support, (1, 0, 0))
        assert not BlockMonoidUtils.is_minimal_zero_sum(group, support, (0, 0, 0))

    def test_zero_sum_is_checked(self):
        support = ((1,), (4,))
        sequence = ZeroSumSequence.over(cyclic(5), support, (5, 5))
        assert sequence.total(cyclic(5)) == (0,)
        assert sequence.length == 10
        with pytest.raises(NotInMonoid):
            ZeroSumSequence.over(cyclic(5), support, (2, 1))
        with pytest.raises(DimensionMismatch):
            ZeroSumSequence.over(cyclic(5), support, (5,))

    def test_render_and_parse(self):
        monoid = BlockMonoidUtils.block_presentation(cyclic(5), [(1,), (4,)])
        rendered = ZeroSumSequence(support=monoid.support, multiplicities=(5, 5)).render()
        assert rendered == "1^5(4)^5"
        assert BlockMonoidUtils.parse_sequence(monoid, rendered) == (5, 5)
        assert BlockMonoidUtils.parse_sequence(monoid, "(6)(9)") == (1, 1), "Residues reduce modulo 5"
        with pytest.raises(NotInMonoid):
            BlockMonoidUtils.parse_sequence(monoid, "2^5")
        with pytest.raises(DimensionMismatch):
            BlockMonoidUtils.parse_sequence(monoid, "(1,1)")
        with pytest.raises(ParseError):
            BlockMonoidUtils.parse_sequence(monoid, "1^5 x")


@pytest.mark.unit
class TestBlockMonoids:
    """Restricted block monoids B(Z_n, {1, n-1})"""

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
    def test_three_atoms_and_one_gap(self, n):
        monoid = BlockMonoidUtils.block_presentation(cyclic(n), [(1,), (n - 1,)])
        assert monoid.atom_count == 3, f"B(Z_{n}, {{1, {n - 1}}}) should have three atoms"
        stats = InvariantCalculator.element_stats(monoid, (n, n))
        assert stats.lengths == (2, n)
        assert stats.delta == (n - 2,)
        assert InvariantCalculator.catenary_degree(monoid, (n, n)) == n

    def test_membership(self):
        monoid = BlockMonoidUtils.block_presentation(cyclic(5), [(1,), (4,)])
        with pytest.raises(NotInMonoid):
            FactorEngine.factorizations(monoid, (2, 1))
        assert FactorEngine.length_mask(monoid, (2, 1)) == 0

    def test_support_validation(self):
        with pytest.raises(DimensionMismatch):
            BlockMonoidUtils.block_presentation(cyclic(5), [(1, 0)])

    @pytest.mark.parametrize("n", [4, 5])
    def test_catenary_exceeds_largest_gap(self, n):
        monoid = BlockMonoidUtils.block_presentation(cyclic(n))
        checked = 0
        for x in MonoidBuilder.scan_elements(monoid, 2 * n):
            stats = InvariantCalculator.element_stats(monoid, x)
            if not stats.delta:
                continue
            catenary = InvariantCalculator.catenary_degree(monoid, x)
            assert catenary >= max(stats.delta) + 2, f"c({x}) = {catenary}, delta {stats.delta}"
            checked += 1
        assert checked > 0

    @pytest.mark.parametrize("n", [4, 5])
    def test_largest_gap_is_davenport_minus_two(self, n):
        monoid = BlockMonoidUtils.block_presentation(cyclic(n))
        scan = InvariantCalculator.delta_scan(monoid, 2 * n)
        assert max(scan.delta) <= monoid.davenport - 2, f"Delta {scan.delta} exceeds D(G) - 2"
        extreme = BlockMonoidUtils.parse_sequence(monoid, f"1^{n}({n - 1})^{n}")
        assert InvariantCalculator.element_stats(monoid, extreme).delta == (n - 2,)
        assert n - 2 in scan.delta, "1^n (n-1)^n sits inside the scan"
