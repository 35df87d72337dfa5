import random

import pytest

from branchcover.cover import ComponentSignature, SetPartition
from branchcover.permcore import Perm, compose, cycle_type
from branchcover.pi0monoid import (
    commutation_check,
    conjugate_component,
    is_good,
    make_good,
    monodromy,
    multiply,
    oracle_multiply,
    ore_witness_1,
    ore_witness_2,
    random_signature,
    stabilize,
    unit,
)


def sig(d, pi_text, blocks, genus):
    return ComponentSignature(d, Perm.parse(pi_text, d), SetPartition(d, blocks), genus)


ANNULUS = sig(2, "()", [{1, 2}], (0,))
BRANCHED_DISK = sig(2, "(1 2)", [{1, 2}], (0,))


class TestUnitAndProduct:
    def test_unit_is_neutral(self):
        rng = random.Random(20)
        for _ in range(200):
            d = rng.randint(1, 6)
            a = random_signature(rng, d)
            e = unit(d)
            assert multiply(e, a) == a
            assert multiply(a, e) == a

    def test_two_annuli_glue_to_a_torus(self):
        prod = multiply(ANNULUS, ANNULUS)
        assert prod == sig(2, "()", [{1, 2}], (1,))
        assert oracle_multiply(ANNULUS, ANNULUS) == prod

    def test_two_branched_disks_glue_to_an_annulus(self):
        prod = multiply(BRANCHED_DISK, BRANCHED_DISK)
        assert prod == sig(2, "()", [{1, 2}], (0,))

    def test_simplified_rule_disagrees_on_two_branched_disks(self):
        prod = multiply(BRANCHED_DISK, BRANCHED_DISK, genus_rule="simplified")
        assert prod.g == (1,)
        assert oracle_multiply(BRANCHED_DISK, BRANCHED_DISK).g == (0,)

    def test_associative(self):
        rng = random.Random(21)
        for _ in range(300):
            d = rng.randint(1, 5)
            a, b, c = (random_signature(rng, d) for _ in range(3))
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    def test_matches_oracle(self):
        rng = random.Random(22)
        for _ in range(500):
            d = rng.randint(1, 6)
            a = random_signature(rng, d)
            b = random_signature(rng, d)
            assert multiply(a, b) == oracle_multiply(a, b)

    def test_monodromy_is_a_homomorphism(self):
        rng = random.Random(23)
        for _ in range(200):
            d = rng.randint(1, 6)
            a = random_signature(rng, d)
            b = random_signature(rng, d)
            assert monodromy(multiply(a, b)) == compose(b.pi, a.pi)


class TestConjugationAndCommutation:
    def test_conjugation_is_an_action(self):
        rng = random.Random(24)
        for _ in range(200):
            d = rng.randint(2, 6)
            a = random_signature(rng, d)
            images = list(range(1, d + 1))
            rng.shuffle(images)
            tau = Perm(images)
            rng.shuffle(images)
            rho = Perm(images)
            lhs = conjugate_component(conjugate_component(a, tau), rho)
            rhs = conjugate_component(a, compose(rho, tau))
            assert lhs == rhs

    def test_commutation_law(self):
        rng = random.Random(25)
        for _ in range(500):
            d = rng.randint(1, 6)
            a = random_signature(rng, d)
            b = random_signature(rng, d)
            assert commutation_check(a, b)


class TestStabilize:
    def test_adds_trivial_sheets(self):
        a = sig(2, "(1 2)", [{1, 2}], (1,))
        b = stabilize(a, 4)
        assert b == sig(4, "(1 2)", [{1, 2}, {3}, {4}], (1, 0, 0))

    def test_rejects_shrinking(self):
        with pytest.raises(ValueError):
            stabilize(unit(3), 2)

    def test_compatible_with_product(self):
        rng = random.Random(26)
        for _ in range(200):
            d = rng.randint(1, 5)
            a = random_signature(rng, d)
            b = random_signature(rng, d)
            big = multiply(stabilize(a, d + 2), stabilize(b, d + 2))
            assert big == stabilize(multiply(a, b), d + 2)


class TestGoodness:
    def test_is_good_examples(self):
        assert is_good(sig(3, "(1 2 3)", [{1, 2, 3}], (1,)))
        assert not is_good(sig(3, "(1 2 3)", [{1, 2, 3}], (2,)))  # d <= 2g-1
        assert not is_good(sig(3, "(1 2)", [{1, 2, 3}], (0,)))  # not a d-cycle

    def test_make_good(self):
        rng = random.Random(27)
        for _ in range(500):
            d = rng.randint(1, 5)
            s = random_signature(rng, d, max_genus=3)
            v, w, result = make_good(s)
            assert is_good(result)
            expected = multiply(stabilize(multiply(s, v), result.d), stabilize(w, result.d))
            assert result == expected


class TestOreWitnesses:
    def test_witness_pair(self):
        rng = random.Random(28)
        for _ in range(500):
            d = rng.randint(1, 5)
            s = random_signature(rng, d)
            t = random_signature(rng, d)
            u, v = ore_witness_1(s, t)
            assert multiply(s, u) == multiply(t, v)

    def test_common_right_multiple_golden(self):
        r = sig(4, "(1 2 3 4)", [{1, 2, 3, 4}], (0,))
        s = sig(4, "()", [{1, 2}, {3, 4}], (1, 0))
        t = sig(4, "()", [{1, 2, 3, 4}], (0,))
        rs = multiply(r, s)
        assert rs == multiply(r, t)
        assert rs == sig(4, "(1 2 3 4)", [{1, 2, 3, 4}], (3,))
        u = ore_witness_2(r, s, t)
        su = multiply(s, u)
        assert su == multiply(t, u)
        assert su.g == (3,)

    def test_common_right_multiple_randomized(self):
        # same shape as the golden case: r connected with a full-cycle
        # boundary absorbs everything, so s and t with equal boundary and
        # equal total chi give equal left products
        rng = random.Random(29)
        found = 0
        while found < 200:
            d = rng.randint(2, 6)
            s = random_signature(rng, d)
            s = ComponentSignature(d, Perm.identity(d), s.F, s.g)
            k = len(s.F.blocks)
            g_t = sum(s.g) - k + 1
            if g_t < 0:
                continue
            t = sig(d, "()", [set(range(1, d + 1))], (g_t,))
            r = ComponentSignature(
                d,
                Perm.from_cycles([tuple(range(1, d + 1))], d),
                SetPartition(d, [set(range(1, d + 1))]),
                (0,),
            )
            assert multiply(r, s) == multiply(r, t)
            u = ore_witness_2(r, s, t)
            assert multiply(s, u) == multiply(t, u)
            assert cycle_type(u.pi) == (d,)
            found += 1

    def test_precondition_enforced(self):
        s = sig(2, "(1 2)", [{1, 2}], (0,))
        t = sig(2, "(1 2)", [{1, 2}], (1,))
        with pytest.raises(ValueError):
            ore_witness_2(unit(2), s, t)
