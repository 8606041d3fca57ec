import pytest
from hypothesis import given, settings, strategies as st

from transvect.poly import Poly, Rational, VarTable, apply_operator, falling

TABLE = VarTable(("x", "y", "z"))
X, Y, Z = (Poly.var(TABLE, n) for n in "xyz")


def poly_from(spec):
    """Build a Poly from {(ex, ey, ez): coeff}."""
    return Poly(TABLE, {e: Rational(c) for e, c in spec.items()})


coeffs = st.integers(min_value=-6, max_value=6)
exponents = st.tuples(
    st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)
)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(poly_from)


class TestRingBasics:
    def test_binomial_square(self):
        assert (X + Y) ** 2 == X**2 + 2 * X * Y + Y**2

    def test_mul_by_zero(self):
        p = X**2 + 3 * Y
        assert p * Poly.zero(TABLE) == Poly.zero(TABLE)
        assert not (p * 0)

    def test_monomial_power(self):
        assert (X * Y) ** 3 == Poly.monomial(TABLE, {"x": 3, "y": 3})

    def test_scalar_arithmetic(self):
        assert (X + 1) * (X - 1) == X**2 - 1
        assert Rational(1, 2) * (2 * X) == X

    def test_mismatched_tables(self):
        other = Poly.var(VarTable(("x", "y")), "x")
        with pytest.raises(ValueError):
            X + other
        with pytest.raises(ValueError):
            X * other

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            X ** (-1)

    def test_canonical_zero_terms_dropped(self):
        p = X - X
        assert p.terms == {}
        assert p.is_zero()


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_leibniz_rule(p, q):
    left = (p * q).derive("x")
    right = p.derive("x") * q + p * q.derive("x")
    assert left == right


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_substitute_is_ring_homomorphism(p, q):
    assignment = {"x": Y + 1, "y": X * Z}
    assert (p * q).substitute(assignment) == p.substitute(assignment) * q.substitute(assignment)
    assert (p + q).substitute(assignment) == p.substitute(assignment) + q.substitute(assignment)


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_apply_operator_linear_in_both_arguments(op1, op2, target):
    slots = ("x", "y")
    lhs = apply_operator(op1 + op2, target, slots)
    rhs = apply_operator(op1, target, slots) + apply_operator(op2, target, slots)
    assert lhs == rhs
    two_targets = apply_operator(op1, target + target, slots)
    assert two_targets == 2 * apply_operator(op1, target, slots)


class TestDerive:
    def test_basic_partial(self):
        assert (X**2 * Y).derive("x") == 2 * X * Y

    def test_order_exceeding_degree_gives_zero(self):
        assert Y.derive("x", 2).is_zero()

    def test_mixed_partials_commute(self):
        p = X * Y
        assert p.derive("x").derive("y") == p.derive("y").derive("x") == Poly.const(TABLE, 1)

    def test_unknown_variable(self):
        with pytest.raises(ValueError):
            X.derive("w")

    def test_higher_order_uses_falling_factorial(self):
        assert (X**5).derive("x", 3) == falling(5, 3) * X**2


class TestSubstitute:
    def test_diagonal_kills_bracket(self):
        t = VarTable(("x1", "x2", "y1", "y2"))
        x1, x2, y1, y2 = (Poly.var(t, n) for n in t.names)
        omega = x1 * y2 - x2 * y1
        assert omega.substitute({"y1": x1, "y2": x2}).is_zero()

    def test_constant_assignment(self):
        t = VarTable(("x1", "x2", "c1", "c2"))
        c_x = Poly.var(t, "c1") * Poly.var(t, "x1") + Poly.var(t, "c2") * Poly.var(t, "x2")
        pinned = c_x.substitute({"c1": Poly.const(t, 1), "c2": Poly.const(t, 0)})
        assert pinned == Poly.var(t, "x1")

    def test_shear(self):
        p = X * Y
        assert p.substitute({"x": X + Y}) == X * Y + Y**2

    def test_unknown_variable(self):
        with pytest.raises(ValueError):
            X.substitute({"w": Y})

    def test_simultaneous_swap(self):
        p = X**2 * Y
        swapped = p.substitute({"x": Y, "y": X})
        assert swapped == Y**2 * X


class TestApplyOperator:
    def test_plain_second_derivative(self):
        op = X * Y  # stands for d/dx d/dy
        target = X**2 * Y**2
        assert apply_operator(op, target, ("x", "y")) == 4 * X * Y

    def test_identity_operator(self):
        target = X**3 + Y * Z
        assert apply_operator(Poly.const(TABLE, 1), target, ("x",)) == target

    def test_split_quadratic_operator(self):
        # oracle: direct expansion of (a1 x1 + a2 x2)^2 then d/da1 d/da2
        t = VarTable(("a1", "a2", "x1", "x2"))
        a1, a2, x1, x2 = (Poly.var(t, n) for n in t.names)
        op = a1 * a2
        target = (a1 * x1 + a2 * x2) ** 2
        expected = ((a1 * x1) * (a2 * x2)) * 2
        expected = expected.substitute({"a1": Poly.const(t, 1), "a2": Poly.const(t, 1)})
        result = apply_operator(op, target, ("a1", "a2"))
        assert result == expected == 2 * x1 * x2

    def test_passive_variables_multiply(self):
        op = Z * X  # d/dx scaled by the passive variable z
        assert apply_operator(op, X**2, ("x",)) == 2 * X * Z

    def test_unknown_slot(self):
        with pytest.raises(ValueError):
            apply_operator(X, X, ("w",))


class TestCoefficientOf:
    def test_exact_match_only(self):
        p = X**2 * Y + X
        assert p.coefficient_of({"x": 2}) == Y
        assert p.coefficient_of({"x": 1}) == Poly.const(TABLE, 1)

    def test_absent_monomial_is_zero(self):
        p = (1 + X) ** 2
        assert p.coefficient_of({"x": 3}).is_zero()

    def test_geometric_series_truncation(self):
        # oracle: sum_{k<=4} (xy)^k is the order-4 truncation of 1/(1-xy)
        series = Poly.zero(TABLE)
        for k in range(5):
            series = series + (X * Y) ** k
        assert series.coefficient_of({"y": 2}) == X**2


class TestSerialization:
    def test_text_form_graded_lex(self):
        p = 2 * X * Y - Rational(1, 3) * Z + 1
        assert p.to_text() == "2/1 * x^1 * y^1 + -1/3 * z^1 + 1/1"

    def test_records_round_trip_exactness(self):
        p = Rational(7, 5) * X**2 - 3 * Y * Z
        records = p.to_records()
        rebuilt = Poly(TABLE, {tuple(e): Rational(n, d) for n, d, e in records})
        assert rebuilt == p

    def test_zero_renders(self):
        assert Poly.zero(TABLE).to_text() == "0"


class TestInspection:
    def test_homogeneity(self):
        assert (X**2 + X * Y).is_homogeneous_in(("x", "y"), 2)
        assert not (X**2 + X).is_homogeneous_in(("x", "y"))
        assert Poly.zero(TABLE).is_homogeneous_in(("x",), 17)

    def test_constant_value(self):
        assert Poly.const(TABLE, Rational(3, 4)).constant_value() == Rational(3, 4)
        with pytest.raises(ValueError):
            X.constant_value()

    def test_coefficient_ratio(self):
        assert (6 * X * Y).coefficient_ratio(4 * X * Y) == Rational(3, 2)
        assert (X + Y).coefficient_ratio(X) is None
        assert Poly.zero(TABLE).coefficient_ratio(X) == 0


def test_vartable_rejects_duplicates():
    with pytest.raises(ValueError):
        VarTable(("x", "x"))


def test_vartable_extend_is_stable():
    t = VarTable(("x", "y"))
    bigger = t.extend(("z",))
    assert bigger.index("x") == t.index("x")
    assert bigger.index("z") == 2
