import itertools
import random
from fractions import Fraction

import pytest

from branchcover.partitions import (
    absolute_length_p,
    disjoint_union,
    enumerate_partitions,
)
from branchcover.permcore import centralizer_order
from branchcover.ring import (
    RingElement,
    cup,
    cup_basis,
    hook_generator,
    leading_term_check,
    monomial_expand,
    verify_polynomial,
)


def basis(lam, d):
    return RingElement.basis(lam, d)


class TestRingElement:
    def test_zero_and_unit(self):
        assert RingElement.zero(4).is_zero()
        assert RingElement.unit(4) == basis((1, 1, 1, 1), 4)
        assert RingElement.unit(4).degree() == 0

    def test_addition_cancels(self):
        x = basis((2, 1), 3)
        assert (x + x.scale(-1)).is_zero()

    def test_degree_of_mixed_element(self):
        mixed = basis((3,), 3) + basis((2, 1), 3)
        assert not mixed.is_homogeneous()
        with pytest.raises(ValueError):
            mixed.degree()

    def test_orbifold_view(self):
        x = basis((2, 2), 4)
        assert x.orbifold_view().coeffs[(2, 2)] == centralizer_order((2, 2))

    def test_str_and_jsonable(self):
        x = basis((3, 1), 4).scale(Fraction(1, 2)) + basis((2, 2), 4).scale(3)
        assert str(x) == "1/2*t_(3,1) + 3*t_(2,2)"
        assert x.to_jsonable() == {
            "d": 4,
            "coeffs": [{"lam": "2,2", "c": "3"}, {"lam": "3,1", "c": "1/2"}],
        }


class TestCupProduct:
    def test_golden_degree_four(self):
        for method in ("brute", "chars"):
            prod = cup_basis((2, 1, 1), (2, 1, 1), 4, method=method)
            expected = basis((3, 1), 4).scale(3) + basis((2, 2), 4).scale(2)
            assert prod == expected

    def test_unit_is_neutral(self):
        for lam in enumerate_partitions(5):
            assert cup(RingElement.unit(5), basis(lam, 5), method="brute") == basis(lam, 5)

    def test_commutative(self):
        parts = list(enumerate_partitions(5))
        for mu, nu in itertools.combinations(parts, 2):
            assert cup_basis(mu, nu, 5, method="chars") == cup_basis(nu, mu, 5, method="chars")

    def test_associative_sampled(self):
        rng = random.Random(40)
        parts = list(enumerate_partitions(5))
        for _ in range(15):
            x, y, z = (basis(rng.choice(parts), 5) for _ in range(3))
            lhs = cup(cup(x, y), z)
            rhs = cup(x, cup(y, z))
            assert lhs == rhs

    def test_grading(self):
        for mu in enumerate_partitions(4):
            for nu in enumerate_partitions(4):
                prod = cup_basis(mu, nu, 4, method="chars")
                if not prod.is_zero():
                    expected = 2 * (absolute_length_p(mu) + absolute_length_p(nu))
                    assert prod.degree() == expected

    def test_methods_agree(self):
        for d in range(2, 6):
            for mu in enumerate_partitions(d):
                for nu in enumerate_partitions(d):
                    assert cup_basis(mu, nu, d, method="brute") == cup_basis(
                        mu, nu, d, method="chars"
                    )

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            cup(RingElement.unit(3), RingElement.unit(4))


class TestLeadingTerm:
    @pytest.mark.parametrize("d", range(2, 8))
    def test_triangularity(self, d):
        for mu in enumerate_partitions(d):
            for nu in enumerate_partitions(d):
                if 2 * (absolute_length_p(mu) + absolute_length_p(nu)) > d:
                    continue
                if disjoint_union(mu, nu, d) is None:
                    continue
                report = leading_term_check(mu, nu, d, method="chars")
                assert report["ok"], report["failures"]

    def test_leading_coefficient_value(self):
        report = leading_term_check((2, 1, 1), (2, 1, 1), 4, method="brute")
        assert report["union"] == (2, 2)
        assert report["leading_coefficient"] == 2

    def test_unrepresentable_pair(self):
        with pytest.raises(ValueError):
            leading_term_check((3,), (2, 1), 3)


class TestPolynomialStructure:
    def test_hook_generators(self):
        assert hook_generator(2, 4) == basis((2, 1, 1), 4)
        assert hook_generator(4, 4) == basis((4,), 4)
        with pytest.raises(ValueError):
            hook_generator(1, 4)
        with pytest.raises(ValueError):
            hook_generator(5, 4)

    def test_monomial_expand_order_independent(self):
        a = monomial_expand([2, 3], 6, method="chars")
        b = monomial_expand([3, 2], 6, method="chars")
        assert a == b
        assert a.degree() == 2 * ((2 - 1) + (3 - 1))

    @pytest.mark.parametrize("d", range(1, 9))
    def test_verify_polynomial(self, d):
        report = verify_polynomial(d, method="chars")
        assert report["ok"], report["failures"]
        for entry in report["degrees"]:
            assert entry["rank"] == entry["monomials"] == entry["betti"]
