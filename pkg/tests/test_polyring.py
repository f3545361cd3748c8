"""Sparse polynomial arithmetic, monomial orders, text syntax."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spechtgb import (
    GF,
    MAX_VARS,
    MonomialOrder,
    Poly,
    PolynomialSyntaxError,
    QQ,
    coefficients_in_last_variable,
    leading_term,
    lex_order,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    parse_field,
    parse_order,
    parse_polynomial,
    polynomial_text,
)

from oracles import eval_poly


def monomials(nvars):
    return st.tuples(*[st.integers(0, 4)] * nvars)


def rationals():
    return st.builds(
        Fraction, st.integers(-6, 6), st.integers(1, 4)
    )


def polys(nvars, field=QQ):
    return st.dictionaries(monomials(nvars), rationals(), max_size=6).map(
        lambda d: Poly(nvars, field, d)
    )


def orders(nvars):
    rank = st.permutations(list(range(1, nvars + 1)))
    plain = st.tuples(st.sampled_from(["lex", "grlex", "grevlex"]), rank).map(
        lambda kr: MonomialOrder(kr[0], nvars, kr[1])
    )
    weighted = st.tuples(
        rank,
        st.lists(
            st.fractions(min_value=Fraction(1, 3), max_value=4),
            min_size=nvars,
            max_size=nvars,
        ),
    ).map(lambda rw: MonomialOrder("weight", nvars, rw[0], rw[1]))
    return st.one_of(plain, weighted)


class TestMonomials:
    def test_operations(self):
        a, b = (2, 0, 1), (1, 3, 0)
        assert mono_mul(a, b) == (3, 3, 1)
        assert mono_lcm(a, b) == (2, 3, 1)
        assert mono_degree(a) == 3
        assert not mono_divides(a, b)
        assert mono_divides(a, (2, 1, 1))
        assert mono_div((2, 1, 1), a) == (0, 1, 0)

    @given(monomials(3), monomials(3))
    def test_div_inverts_mul(self, a, b):
        assert mono_div(mono_mul(a, b), b) == a
        assert mono_divides(a, mono_lcm(a, b))
        assert mono_divides(b, mono_lcm(a, b))


class TestRingAxioms:
    @settings(max_examples=60)
    @given(polys(3), polys(3), polys(3))
    def test_add_and_mul_laws(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @settings(max_examples=40)
    @given(polys(3))
    def test_identities_and_inverses(self, f):
        zero = Poly.zero(3)
        one = Poly.constant(1, 3)
        assert f + zero == f
        assert f * one == f
        assert f - f == zero
        assert f * zero == zero
        assert -(-f) == f

    @settings(max_examples=40)
    @given(polys(2), st.integers(0, 4))
    def test_pow_matches_repeated_product(self, f, e):
        expected = Poly.constant(1, 2)
        for _ in range(e):
            expected = expected * f
        assert f**e == expected

    @settings(max_examples=40)
    @given(polys(3), polys(3), st.lists(rationals(), min_size=3, max_size=3))
    def test_evaluate_is_a_ring_map(self, f, g, point):
        pt = tuple(point)
        assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
        assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
        assert f.evaluate(pt) == eval_poly(f.terms, pt)

    def test_scalar_coercion(self):
        x1 = Poly.variable(1, 2)
        assert 2 * x1 - x1 == x1
        assert (x1 + Fraction(1, 2)) * 2 == 2 * x1 + 1
        assert x1 * 0 == Poly.zero(2)

    def test_cross_ring_operations_rejected(self):
        with pytest.raises(ValueError):
            Poly.variable(1, 2) + Poly.variable(1, 3)
        with pytest.raises(ValueError):
            Poly.variable(1, 2, QQ) + Poly.variable(1, 2, GF(5))


class TestFiniteFields:
    def test_arithmetic_mod_p(self):
        F = GF(7)
        assert F.coerce(10) == 3
        assert F.inv(3) == 5  # 3*5 = 15 = 1 mod 7
        assert F.coerce(Fraction(1, 2)) == 4  # 2*4 = 1 mod 7
        with pytest.raises(ValueError):
            GF(6)
        with pytest.raises(ZeroDivisionError):
            F.inv(0)

    def test_poly_collapse_mod_p(self):
        f = parse_polynomial("3*x1 + 4*x1", 1, GF(7))
        assert not f
        assert f == Poly.zero(1, GF(7))

    def test_field_text_roundtrip(self):
        assert parse_field("Q") == QQ
        assert parse_field("F7") == GF(7)
        assert parse_field(GF(3).text()) == GF(3)
        with pytest.raises(ValueError):
            parse_field("R")


class TestMonomialOrders:
    def test_ranking_convention(self):
        # ranking lists variables ascending: the last entry is most significant
        order = lex_order(3)
        assert leading_term(
            parse_polynomial("x1^5 + x3", 3), order
        ) == ((0, 0, 1), Fraction(1))
        reranked = lex_order(3, [3, 2, 1])
        assert leading_term(
            parse_polynomial("x1 + x3^5", 3), reranked
        ) == ((1, 0, 0), Fraction(1))

    def test_grevlex_differs_from_grlex(self):
        order_a = MonomialOrder("grlex", 3)
        order_b = MonomialOrder("grevlex", 3)
        # x1*x3 vs x2^2: same degree; grlex looks at x3 first, grevlex
        # discards the smallest-variable exponent first
        a, b = (1, 0, 1), (0, 2, 0)
        assert order_a.compare(a, b) == 1
        assert order_b.compare(a, b) == -1

    @settings(max_examples=60)
    @given(orders(3), monomials(3), monomials(3), monomials(3))
    def test_order_axioms(self, order, a, b, c):
        # total, antisymmetric, translation invariant, 1 is minimal
        ka, kb = order.key(a), order.key(b)
        assert (ka == kb) == (a == b)
        assert order.compare(a, b) == -order.compare(b, a)
        assert order.compare(mono_mul(a, c), mono_mul(b, c)) == order.compare(a, b)
        assert order.compare(a, (0, 0, 0)) >= 0

    @settings(max_examples=30)
    @given(orders(4))
    def test_text_roundtrip(self, order):
        assert parse_order(order.text(), 4) == order

    @settings(max_examples=30)
    @given(orders(3))
    def test_induced_lex_sorts_variables_identically(self, order):
        induced = order.induced_lex()
        assert induced.kind == "lex"
        assert induced.variable_ascending() == order.variable_ascending()

    def test_validation(self):
        with pytest.raises(ValueError):
            MonomialOrder("lex", 3, [1, 1, 2])
        with pytest.raises(ValueError):
            MonomialOrder("weight", 2, None, [1, -1])
        with pytest.raises(ValueError):
            MonomialOrder("lex", MAX_VARS + 1)
        with pytest.raises(ValueError):
            parse_order("alpha:1,2", 2)


class TestTextSyntax:
    def test_parse_examples(self):
        f = parse_polynomial("x1^2*x2 - 3/4*x3 + 2", 3)
        assert f.terms == {
            (2, 1, 0): Fraction(1),
            (0, 0, 1): Fraction(-3, 4),
            (0, 0, 0): Fraction(2),
        }
        g = parse_polynomial("(x1 - x2)*(x1 + x2)", 3)
        assert g == parse_polynomial("x1^2 - x2^2", 3)
        assert parse_polynomial("-x1^2", 2).terms == {(2, 0): Fraction(-1)}
        assert parse_polynomial("0", 2) == Poly.zero(2)

    def test_syntax_errors_carry_positions(self):
        with pytest.raises(PolynomialSyntaxError) as info:
            parse_polynomial("x1 +* x2", 2)
        assert info.value.position == 4
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x9", 2)  # variable out of range
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("(x1", 2)

    @settings(max_examples=60)
    @given(polys(3))
    def test_print_parse_roundtrip(self, f):
        assert parse_polynomial(polynomial_text(f), 3) == f

    @settings(max_examples=30)
    @given(polys(2, GF(5)))
    def test_roundtrip_over_finite_field(self, f):
        assert parse_polynomial(polynomial_text(f), 2, GF(5)) == f

    @settings(max_examples=30)
    @given(polys(3), orders(3))
    def test_text_respects_requested_order(self, f, order):
        text = polynomial_text(f, order)
        assert parse_polynomial(text, 3) == f
        if f.terms:
            lead, coeff = leading_term(f, order)
            # the text up to the first interior +/- is exactly the leading term
            cut = len(text)
            for sep in (" + ", " - "):
                pos = text.find(sep)
                if pos != -1:
                    cut = min(cut, pos)
            head = parse_polynomial(text[:cut], 3)
            assert head.terms == {lead: coeff}


class TestLeadingTerms:
    @settings(max_examples=60)
    @given(polys(3), polys(3), orders(3))
    def test_multiplicative_over_a_domain(self, f, g, order):
        if not f.terms or not g.terms:
            return
        mf, cf = leading_term(f, order)
        mg, cg = leading_term(g, order)
        mfg, cfg = leading_term(f * g, order)
        assert mfg == mono_mul(mf, mg)
        assert cfg == cf * cg

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            leading_term(Poly.zero(2), lex_order(2))


class TestCoefficientExtraction:
    def test_worked_example(self):
        f = parse_polynomial("(x3 - x1)*(x3 - x2)", 3)
        shares = coefficients_in_last_variable(f)
        assert len(shares) == 3
        assert all(g.nvars == 2 for g in shares)
        assert shares[0] == parse_polynomial("x1*x2", 2)
        assert shares[1] == parse_polynomial("-x1 - x2", 2)
        assert shares[2] == parse_polynomial("1", 2)

    def test_zero_and_univariate_rejected(self):
        with pytest.raises(ValueError):
            coefficients_in_last_variable(Poly.zero(3))
        with pytest.raises(ValueError):
            coefficients_in_last_variable(parse_polynomial("x1", 1))

    @settings(max_examples=60)
    @given(polys(3))
    def test_reconstruction(self, f):
        if not f.terms:
            return
        shares = coefficients_in_last_variable(f)
        rebuilt = Poly.zero(3)
        for k, g in enumerate(shares):
            lifted = Poly(
                3, QQ, {m + (k,): c for m, c in g.terms.items()}
            )
            rebuilt = rebuilt + lifted
        assert rebuilt == f
        if f.terms:
            assert len(shares) == f.degree_in(3) + 1
            assert shares[-1].terms  # top share is nonzero


class TestDegrees:
    @settings(max_examples=40)
    @given(polys(3), polys(3))
    def test_total_degree_of_product(self, f, g):
        if f.terms and g.terms:
            assert (f * g).total_degree() == f.total_degree() + g.total_degree()

    def test_zero_has_no_degree(self):
        with pytest.raises(ValueError):
            Poly.zero(3).total_degree()
        with pytest.raises(ValueError):
            Poly.zero(3).degree_in(1)

    def test_degree_in_variable(self):
        f = parse_polynomial("x1^3*x2 + x2^5", 3)
        assert f.degree_in(1) == 3
        assert f.degree_in(2) == 5
        assert f.degree_in(3) == 0
