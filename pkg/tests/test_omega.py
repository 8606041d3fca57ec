import random
from math import factorial

import pytest

from transvect.omega import (
    BinaryFormPair,
    X_VARS,
    Y_VARS,
    omega_diag,
    omega_power,
    polarize,
    polarized_product,
    set_block_equal,
    transvectant,
)
from transvect.poly import Poly, Rational, VarTable

TABLE = VarTable(X_VARS + Y_VARS)
X1, X2, Y1, Y2 = (Poly.var(TABLE, n) for n in TABLE.names)
BRACKET = X1 * Y2 - X2 * Y1


def random_binary_form(table, rng, degree, extra=()):
    """Random form, homogeneous of the given degree in x1, x2."""
    out = Poly.zero(table)
    for i in range(degree + 1):
        c = rng.randint(-5, 5)
        if c:
            out = out + Poly.monomial(table, {"x1": degree - i, "x2": i}, c)
    if out.is_zero():
        out = Poly.monomial(table, {"x1": degree})
    return out


class TestOmegaPower:
    def test_bracket_gives_two(self):
        assert omega_power(BRACKET, 1) == Poly.const(TABLE, 2)

    def test_unmatched_pair_gives_zero(self):
        assert omega_power(X1 * Y1, 1).is_zero()

    def test_double_application(self):
        # hand oracle: omega(x1 x2 y1 y2) = -bracket, omega(-bracket) = -2
        step1 = omega_power(X1 * X2 * Y1 * Y2, 1)
        assert step1 == -BRACKET
        assert omega_power(X1 * X2 * Y1 * Y2, 2) == Poly.const(TABLE, -2)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_omega_on_bracket_powers(self, k):
        # constant is nonzero; for k = 1, 2 the hand expansion gives 2 and 12
        value = omega_power(BRACKET**k, k).constant_value()
        assert value == factorial(k) * factorial(k + 1)

    def test_zero_power_is_identity(self):
        p = (X1 + Y2) ** 3
        assert omega_power(p, 0) == p


class TestTransvectant:
    def test_raw_split_quadratic(self):
        assert transvectant(X1 * X2, X1 * X2, 2) == Poly.const(TABLE, -2)

    @pytest.mark.parametrize("k", [1, 3, 5])
    def test_odd_self_transvectant_vanishes(self, k):
        rng = random.Random(3)
        f = random_binary_form(TABLE, rng, 6)
        assert transvectant(f, f, k).is_zero()

    def test_linear_form_power_pairs_vanish(self):
        l = 2 * X1 + 3 * X2
        for k in (1, 2):
            assert transvectant(l**3, l**2, k).is_zero()

    def test_index_above_degree_rejected(self):
        with pytest.raises(ValueError):
            transvectant(X1 * X2, X1 * X2, 3)

    def test_swap_antisymmetry(self):
        rng = random.Random(5)
        f = random_binary_form(TABLE, rng, 4)
        g = random_binary_form(TABLE, rng, 5)
        for k in range(0, 5):
            assert transvectant(f, g, k) == (-1) ** k * transvectant(g, f, k)

    def test_bilinearity(self):
        rng = random.Random(7)
        f1 = random_binary_form(TABLE, rng, 4)
        f2 = random_binary_form(TABLE, rng, 4)
        g = random_binary_form(TABLE, rng, 3)
        for k in range(0, 4):
            left = transvectant(f1 + 2 * f2, g, k, deg_f=4, deg_g=3)
            right = transvectant(f1, g, k) + 2 * transvectant(f2, g, k)
            assert left == right

    def test_degree_bookkeeping(self):
        rng = random.Random(9)
        f = random_binary_form(TABLE, rng, 5)
        g = random_binary_form(TABLE, rng, 4)
        for k in range(0, 5):
            out = transvectant(f, g, k)
            assert out.is_homogeneous_in(X_VARS, 9 - 2 * k)

    def test_normalized_scale(self):
        f = (X1 + X2) ** 4
        raw = transvectant(f, f, 2)
        normalized = transvectant(f, f, 2, normalized=True)
        scale = Rational(factorial(2) ** 2, factorial(4) ** 2)
        assert normalized == raw * scale

    def test_pair_type_checks_homogeneity(self):
        with pytest.raises(ValueError):
            BinaryFormPair(X1 + X1 * X2, X1, 2, 1)
        pair = BinaryFormPair(X1 * X2, X1 * X2, 2, 2)
        assert pair.transvect(2) == Poly.const(TABLE, -2)


class TestPolarize:
    def test_raw_single_step(self):
        assert polarize(X1**2, 1, normalized=False) == 2 * X1 * Y1

    def test_zero_steps_identity(self):
        f = (X1 + 2 * X2) ** 3
        assert polarize(f, 0) == f

    def test_normalized_on_power_of_linear_form(self):
        l = 3 * X1 - X2
        ly = 3 * Y1 - Y2
        for d, e in ((4, 2), (5, 3), (3, 3)):
            assert polarize(l**d, e) == l ** (d - e) * ly**e

    def test_over_polarization_rejected(self):
        with pytest.raises(ValueError):
            polarize(X1**2, 3)


class TestPolarizedProduct:
    def test_two_linear_powers_give_quadratic_powers(self):
        # the d = 2e case collapses to Q(x)^e Q(y)^e with Q = l1 l2
        l1 = X1 + 2 * X2
        l2 = 3 * X1 - X2
        e = 2
        image = polarized_product([l1 ** (2 * e), l2 ** (2 * e)], e)
        q = l1 * l2
        qy = set_block_equal(q, X_VARS, Y_VARS)
        assert image == q**e * qy**e

    def test_single_factor(self):
        l = X1 + X2
        ly = Y1 + Y2
        assert polarized_product([l**4], 2) == l**2 * ly**2

    def test_block_swap_symmetry(self):
        rng = random.Random(11)
        forms = [random_binary_form(TABLE, rng, 4) for _ in range(2)]
        image = polarized_product(forms, 2)
        swapped = image.substitute(
            {"x1": Y1, "x2": Y2, "y1": X1, "y2": X2}
        )
        assert image == swapped

    def test_multilinear_and_symmetric(self):
        rng = random.Random(13)
        f1 = random_binary_form(TABLE, rng, 2)
        f2 = random_binary_form(TABLE, rng, 2)
        g = random_binary_form(TABLE, rng, 2)
        e = 1
        assert polarized_product([f1, g], e) == polarized_product([g, f1], e)
        lhs = polarized_product([f1 + 3 * f2, g], e)
        rhs = polarized_product([f1, g], e) + 3 * polarized_product([f2, g], e)
        assert lhs == rhs

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            polarized_product([X1**2, X1**4], 1)


class TestOmegaDiag:
    def test_zero_projection_is_diagonal_restriction(self):
        s = X1 * Y2
        assert omega_diag(s, 0) == X1 * X2

    def test_split_quadratic_projection(self):
        qx = X1 * X2
        qy = Y1 * Y2
        assert omega_diag(qx * qy, 1) == Poly.const(TABLE, -2)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_on_bracket_powers(self, m):
        out = omega_diag(BRACKET ** (2 * m), m)
        assert out.constant_value() == factorial(2 * m) * factorial(2 * m + 1)
