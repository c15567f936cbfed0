import random
from fractions import Fraction as Q

import pytest

from hypident.algebra import Polynomial, RationalFunction
from hypident.errors import KBelowRange, NotSimplePole
from hypident.fuzzing import random_instance
from hypident.hyper import IdentityInstance, validate
from hypident.residues import (
    residue_at_infinity,
    residue_at_simple_pole,
    residue_closed_form,
    residue_kernel,
    residue_sum_closed_form,
    sum_finite_residues,
)

CANONICAL = IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3), Q(1, 4)), m=(0, 0), n=(0, 0))
SHIFTED = IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3), Q(1, 4)), m=(1, 1), n=(0, 0))


class TestKernelConstruction:
    def test_zero_shift_k0(self):
        kernel = residue_kernel(CANONICAL, 0)
        assert kernel.fraction.num == Polynomial.one()
        assert kernel.fraction.den == Polynomial.from_roots([0, Q(1, 2)])
        assert sorted(p.location for p in kernel.poles) == [0, Q(1, 2)]

    def test_unit_shift_numerator(self):
        kernel = residue_kernel(SHIFTED, 0)
        # (z - 1/3 + 1)(z - 1/4 + 1) = (z + 2/3)(z + 3/4)
        assert kernel.fraction.num == Polynomial.from_roots([Q(-2, 3), Q(-3, 4)])
        assert kernel.fraction.den == Polynomial.from_roots([0, Q(1, 2)])

    def test_k1_denominator(self):
        kernel = residue_kernel(CANONICAL, 1)
        assert kernel.fraction.den == Polynomial.from_roots([1, 0, Q(3, 2), Q(1, 2)])
        assert len(kernel.poles) == 4
        assert all(
            residue_at_simple_pole(kernel.fraction, p.location) is not None
            for p in kernel.poles
        )

    def test_confluent_numerator_is_one(self):
        inst = IdentityInstance(a=(0, Q(1, 3)), b=(), m=(), n=(1, 0))
        for k in range(4):
            assert residue_kernel(inst, k).fraction.num == Polynomial.one()

    def test_negative_denominator_shift_flips_to_numerator(self):
        inst = IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3), Q(1, 4)), m=(0, 0), n=(-3, 0))
        kernel = residue_kernel(inst, 0)
        # (z - a_0)_{-2} contributes (z - 1)(z - 2) upstairs
        expected_num = Polynomial.from_roots([1, 2])
        assert kernel.fraction.num == expected_num
        assert all(p.i == 1 for p in kernel.poles)  # only a_1's string has poles

    def test_k_below_range(self):
        with pytest.raises(KBelowRange):
            residue_kernel(SHIFTED, -2)  # m_min = 1 allows k >= -1
        residue_kernel(SHIFTED, -1)

    def test_degree_bookkeeping(self):
        t2 = IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3),), m=(3,), n=(0, 0))
        derived = validate(t2)
        for k in range(0, 6):
            kernel = residue_kernel(t2, k)
            expected = derived.M - derived.N - derived.r - (derived.r - derived.s) * k
            assert kernel.fraction.degree_offset == expected
        derived = validate(SHIFTED)
        for k in range(-1, 6):
            kernel = residue_kernel(SHIFTED, k)
            assert kernel.fraction.degree_offset == derived.M - derived.N - derived.r


class TestSimplePoleResidue:
    def test_single_pole(self):
        f = RationalFunction(Polynomial.one(), Polynomial.from_roots([Q(5, 7)]))
        assert residue_at_simple_pole(f, Q(5, 7)) == 1

    def test_partial_fractions(self):
        f = RationalFunction(Polynomial.one(), Polynomial.from_roots([0, 1]))
        assert residue_at_simple_pole(f, 0) == -1
        assert residue_at_simple_pole(f, 1) == 1

    def test_multiple_root_rejected(self):
        f = RationalFunction(Polynomial.one(), Polynomial.from_roots([1, 1]))
        with pytest.raises(NotSimplePole):
            residue_at_simple_pole(f, 1)

    def test_non_root_rejected(self):
        f = RationalFunction(Polynomial.one(), Polynomial.from_roots([1]))
        with pytest.raises(NotSimplePole):
            residue_at_simple_pole(f, 2)


class TestClosedForm:
    def test_conventions(self):
        assert residue_closed_form(CANONICAL, 0, 3, -1) == 0
        assert residue_closed_form(CANONICAL, 0, 3, 4) == 0  # j > k + n_i
        assert residue_closed_form(CANONICAL, 1, 2, 3) == 0

    def test_matches_direct_residue_at_origin(self):
        kernel = residue_kernel(CANONICAL, 0)
        direct = residue_at_simple_pole(kernel.fraction, 0)
        assert direct == residue_closed_form(CANONICAL, 0, 0, 0) == -2

    def test_matches_direct_residue_everywhere(self):
        for inst in (
            CANONICAL,
            SHIFTED,
            IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3), Q(1, 4)), m=(-1, 0), n=(0, -2)),
            IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3),), m=(3,), n=(0, 0)),
        ):
            m_min = validate(inst).m_min
            for k in range(-m_min, -m_min + 5):
                kernel = residue_kernel(inst, k)
                for pole in kernel.poles:
                    direct = residue_at_simple_pole(kernel.fraction, pole.location)
                    assert direct == residue_closed_form(inst, pole.i, k, pole.j)


class TestResidueTheorem:
    def test_consistency_window(self):
        instances = [
            CANONICAL,
            SHIFTED,
            IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3), Q(1, 4)), m=(-1, 0), n=(0, -2)),
            IdentityInstance(a=(Q(1, 5), Q(1, 2), Q(2, 7)), b=(Q(1, 3), Q(1, 4), Q(8, 3)), m=(2, -1, 0), n=(1, 0, -2)),
            IdentityInstance(a=(0, Q(1, 3)), b=(), m=(), n=(2, -1)),
        ]
        for inst in instances:
            m_min = validate(inst).m_min
            for k in range(-m_min, -m_min + 21):
                kernel = residue_kernel(inst, k)
                finite = sum_finite_residues(kernel)
                assert finite == residue_at_infinity(kernel)
                assert finite == residue_sum_closed_form(inst, k)

    def test_consistency_on_random_instances(self):
        rng = random.Random(31)
        for _ in range(10):
            inst = random_instance(rng, r_range=(2, 3), shift_range=2)
            m_min = validate(inst).m_min
            for k in range(-m_min, -m_min + 8):
                kernel = residue_kernel(inst, k)
                finite = sum_finite_residues(kernel)
                assert finite == residue_at_infinity(kernel)
                assert finite == residue_sum_closed_form(inst, k)

    def test_zero_shift_antisymmetry(self):
        kernel = residue_kernel(CANONICAL, 0)
        a1, a2 = CANONICAL.a
        assert 1 / (a1 - a2) + 1 / (a2 - a1) == 0
        assert sum_finite_residues(kernel) == 0
        assert residue_at_infinity(kernel) == 0

    def test_degree_gap_means_zero(self):
        # deg num <= deg den - 2 forces a vanishing 1/z coefficient
        kernel = residue_kernel(CANONICAL, 0)
        assert kernel.fraction.degree_offset == -2
        assert residue_at_infinity(kernel) == 0

    def test_unit_value_when_offset_is_minus_one(self):
        inst = IdentityInstance(a=(0, Q(1, 2)), b=(Q(1, 3), Q(1, 4)), m=(1, 0), n=(0, 0))
        assert validate(inst).p == 0
        for k in range(0, 9):
            assert residue_at_infinity(residue_kernel(inst, k)) == 1
