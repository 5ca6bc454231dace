import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import grid_values, hull_vertices, joint_denominator, rand_point, rand_poly
from tropfan import (
    NEG_INF,
    TEXT_BOTTOM,
    BadParameters,
    DimensionMismatch,
    EmptyPolynomial,
    LaurentPoly,
    ParseError,
    canonicalize,
    fn_eq,
    fn_witness,
    germ_eq,
    germ_localize,
    germ_safe_radius,
    parse_point,
    parse_poly_text,
    poly_from_json,
    poly_to_json,
    poly_to_text,
    text_add,
    text_mul,
)

P0 = parse_poly_text("1 + 3*x^1 + 2*y^1 + 3*x^1*y^1")


@st.composite
def polys(draw, num_vars=None, boolean=False):
    n = num_vars if num_vars is not None else draw(st.integers(1, 3))
    k = draw(st.integers(1, 5))
    coeff = st.just(Fraction(0)) if boolean else st.fractions(max_denominator=4, min_value=-6, max_value=6)
    items = draw(
        st.lists(
            st.tuples(st.tuples(*[st.integers(-3, 3) for _ in range(n)]), coeff),
            min_size=1,
            max_size=k,
        )
    )
    return LaurentPoly.make(n, items)


points2 = st.tuples(
    st.fractions(max_denominator=4, min_value=-8, max_value=8),
    st.fractions(max_denominator=4, min_value=-8, max_value=8),
)


class TestConstruction:
    def test_make_normalizes(self):
        P = LaurentPoly.make(2, [((1, 0), 3), ((0, 1), 2), ((1, 0), 1), ((2, 2), NEG_INF)])
        assert P.terms == (((0, 1), Fraction(2)), ((1, 0), Fraction(3)))

    def test_direct_construction_is_strict(self):
        with pytest.raises(BadParameters):
            LaurentPoly(2, (((1, 0), Fraction(0)), ((0, 1), Fraction(0))))  # not sorted
        with pytest.raises(BadParameters):
            LaurentPoly(2, (((1, 0), NEG_INF),))
        with pytest.raises(DimensionMismatch):
            LaurentPoly(2, (((1,), Fraction(0)),))

    def test_factories(self):
        assert not LaurentPoly.zero(2)
        assert LaurentPoly.one(2).terms == (((0, 0), Fraction(0)),)
        assert LaurentPoly.constant(1, Fraction(5)).eval((7,)) == 5
        m = LaurentPoly.monomial(2, (1, -2), Fraction(3, 2))
        assert m.is_monomial and m.coeff((1, -2)) == Fraction(3, 2)
        assert m.coeff((0, 0)) is NEG_INF

    def test_boolean_flags(self):
        assert parse_poly_text("0 + x").is_boolean
        assert not P0.is_boolean


class TestSemiringLaws:
    @given(polys(num_vars=2), polys(num_vars=2), points2)
    def test_add_is_pointwise_max(self, P, Q, p):
        assert (P + Q).eval(p) == max(P.eval(p), Q.eval(p))

    @given(polys(num_vars=2), polys(num_vars=2), points2)
    def test_mul_is_pointwise_sum(self, P, Q, p):
        lhs = (P * Q).eval(p)
        a, b = P.eval(p), Q.eval(p)
        assert lhs == (a + b)

    @given(polys(num_vars=2), st.integers(0, 4), points2)
    def test_pow(self, P, k, p):
        v = P.eval(p)
        expect = 0 if k == 0 else (NEG_INF if v is NEG_INF else k * v)
        assert (P ** k).eval(p) == expect

    def test_pow_rejects_negative(self):
        with pytest.raises(BadParameters):
            P0 ** -1

    @given(polys(num_vars=2), points2, points2)
    def test_shift(self, P, a, p):
        q = tuple(x + y for x, y in zip(a, p))
        assert P.shift(a).eval(p) == P.eval(q)

    def test_dimension_checks(self):
        with pytest.raises(DimensionMismatch):
            P0 + LaurentPoly.one(3)
        with pytest.raises(DimensionMismatch):
            P0.eval((1,))


class TestInitialForm:
    def test_known(self):
        assert poly_to_text(P0.initial_form((0, 0))) == "3*x + 3*x*y"
        assert poly_to_text(P0.initial_form((-10, -10))) == "1"

    def test_empty_rejected(self):
        with pytest.raises(EmptyPolynomial):
            LaurentPoly.zero(2).initial_form((0, 0))

    @given(polys(num_vars=2), polys(num_vars=2), points2)
    def test_product_law(self, P, Q, p):
        assert (P * Q).initial_form(p) == (P.initial_form(p) * Q.initial_form(p))

    @given(polys(num_vars=2), polys(num_vars=2), points2)
    def test_sum_law_three_cases(self, P, Q, p):
        a, b = P.eval(p), Q.eval(p)
        got = (P + Q).initial_form(p)
        if a > b:
            assert got == P.initial_form(p)
        elif b > a:
            assert got == Q.initial_form(p)
        else:
            assert got == P.initial_form(p) + Q.initial_form(p)

    @given(polys(num_vars=2), points2)
    def test_idempotent(self, P, p):
        f = P.initial_form(p)
        assert f.initial_form(p) == f


class TestCanonicalization:
    def test_redundant_interior_term_dropped(self):
        # 0 + 1*x + 2*x^2: the middle slope is the roof of the outer two at x=1
        P = parse_poly_text("0 + 1*x + 2*x^2")
        C = canonicalize(P)
        assert C.terms == (((0,), Fraction(0)), ((2,), Fraction(2)))

    def test_strictly_contributing_term_kept(self):
        P = parse_poly_text("0 + 1*x + 0*x^2")
        assert len(canonicalize(P).terms) == 3

    def test_boolean_matches_hull_oracle(self):
        rng = random.Random(99)
        for _ in range(120):
            n = rng.randint(1, 3)
            k = rng.randint(1, 8)
            items = [(tuple(rng.randint(-3, 3) for _ in range(n)), 0) for _ in range(k)]
            P = LaurentPoly.make(n, items)
            got = set(canonicalize(P).poly.support())
            assert got == hull_vertices(P.support())

    @given(polys(num_vars=2))
    def test_canonical_form_preserves_function(self, P):
        assert fn_eq(P, canonicalize(P).poly)

    @given(polys(num_vars=2), polys(num_vars=2))
    def test_canonical_ops_match_poly_ops(self, P, Q):
        assert fn_eq((canonicalize(P) + canonicalize(Q)).poly, P + Q)
        assert fn_eq((canonicalize(P) * canonicalize(Q)).poly, P * Q)


class TestFunctionEquality:
    def test_known_pairs(self):
        assert fn_eq(parse_poly_text("0 + 1*x + 2*x^2"), parse_poly_text("0 + 2*x^2"))
        assert not fn_eq(parse_poly_text("0 + 1*x + 0*x^2"), parse_poly_text("0 + 0*x^2"))
        assert fn_eq(LaurentPoly.zero(2), LaurentPoly.zero(2))
        assert not fn_eq(LaurentPoly.zero(2), LaurentPoly.one(2))

    @given(polys(num_vars=2), polys(num_vars=2))
    def test_witness_iff_not_equal(self, P, Q):
        if fn_eq(P, Q):
            assert fn_witness(P, Q) is None
        else:
            w = fn_witness(P, Q)
            assert w is not None and P.eval(w) != Q.eval(w)

    def test_grid_cross_check(self):
        rng = random.Random(7)
        for _ in range(60):
            P = rand_poly(rng, 2, max_terms=5)
            Q = rand_poly(rng, 2, max_terms=5)
            if rng.random() < 0.3:
                Q = P + LaurentPoly.make(2, [((0, 0), Fraction(-50))])  # same function
            D = joint_denominator(P, Q)
            gp, gq = grid_values(P, D), grid_values(Q, D)
            grids_equal = (gp == gq).all()
            if fn_eq(P, Q):
                assert grids_equal
            else:
                w = fn_witness(P, Q)
                assert P.eval(w) != Q.eval(w)


class TestGerm:
    def test_known_localization(self):
        g = germ_localize(P0, (0, 0))
        assert g.grade == 3
        assert poly_to_text(g.part.poly) == "x + x*y"
        assert germ_localize(LaurentPoly.zero(2), (0, 0)) == TEXT_BOTTOM

    @given(polys(num_vars=2), polys(num_vars=2), points2)
    def test_homomorphism(self, P, Q, p):
        assert germ_localize(P + Q, p) == text_add(germ_localize(P, p), germ_localize(Q, p))
        assert germ_localize(P * Q, p) == text_mul(germ_localize(P, p), germ_localize(Q, p))

    @given(polys(num_vars=2), points2)
    def test_grade_is_value(self, P, p):
        assert germ_localize(P, p).grade == P.eval(p)

    def test_germ_eq_vs_fn_eq(self):
        P = parse_poly_text("0 + 1*x")
        Q = parse_poly_text("1*x", 1)
        # at p = 2 the x-term dominates both: same germ, different functions
        assert germ_eq(P, Q, (2,))
        assert not fn_eq(P, Q)
        # at p = -2 the constant term of P wins
        assert not germ_eq(P, Q, (-2,))

    def test_safe_radius_soundness(self):
        rng = random.Random(31)
        checked = 0
        for _ in range(80):
            P = rand_poly(rng, 2, max_terms=6)
            p = rand_point(rng, 2)
            r = germ_safe_radius(P, p)
            assert r > 0
            ini = P.initial_form(p)
            for _ in range(20):
                # random rational q with |q - p|_1 < r
                q = tuple(
                    c + Fraction(rng.randint(-99, 99), 100) * r / 2 for c in p
                )
                assert sum(abs(a - b) for a, b in zip(q, p)) < r
                assert P.eval(q) == ini.eval(q)
                checked += 1
        assert checked

    def test_safe_radius_monomial_is_unbounded_choice(self):
        # single-term polynomials agree with their initial form globally;
        # any positive radius is sound
        assert germ_safe_radius(LaurentPoly.monomial(2, (1, 1), 0), (0, 0)) > 0


class TestTextFormat:
    def test_round_trip_examples(self):
        for s, back in [
            ("1 + 3*x^1 + 2*y^1 + 3*x^1*y^1", "1 + 2*y + 3*x + 3*x*y"),
            ("-inf", "-inf"),
            ("0", "0"),
            ("x^-2*y^3", "x^-2*y^3"),
            ("1/2*x", "1/2*x"),
            ("3*x1^2*x2 + x3", "z + 3*x^2*y"),
            ("2*2*x*x", "4*x^2"),
        ]:
            assert poly_to_text(parse_poly_text(s)) == back

    def test_round_trip_random(self):
        rng = random.Random(13)
        for _ in range(150):
            P = rand_poly(rng, rng.randint(1, 4))
            assert parse_poly_text(poly_to_text(P), P.num_vars) == P

    def test_aliases_and_indexed_names(self):
        assert parse_poly_text("x5^2", 5).support() == ((0, 0, 0, 0, 2),)
        P = parse_poly_text("w", 4)
        assert P.support() == ((0, 0, 0, 1),)

    def test_duplicate_exponents_combine_by_max(self):
        assert parse_poly_text("1*x + 3*x", 1) == parse_poly_text("3*x", 1)

    def test_parse_errors(self):
        for bad in ["", "  ", "x +", "foo", "x^a", "x0", "x^1.5", "1 ++ 2", "x6"]:
            with pytest.raises(ParseError):
                parse_poly_text(bad, 5 if bad == "x6" else None)

    def test_five_vars_print_indexed(self):
        P = LaurentPoly.monomial(5, (1, 0, 0, 0, 2), 0)
        assert poly_to_text(P) == "x1*x5^2"

    def test_parse_point(self):
        assert parse_point("1/2, -3") == (Fraction(1, 2), Fraction(-3))
        with pytest.raises(ParseError):
            parse_point("1, x")
        with pytest.raises(ParseError):
            parse_point("1, 2", 3)


class TestJson:
    def test_round_trip(self):
        rng = random.Random(17)
        for _ in range(80):
            P = rand_poly(rng, rng.randint(1, 3))
            assert poly_from_json(poly_to_json(P)) == P

    def test_empty(self):
        obj = poly_to_json(LaurentPoly.zero(2))
        assert obj["terms"] == []
        assert poly_from_json(obj) == LaurentPoly.zero(2)

    def test_bad_objects(self):
        with pytest.raises(ParseError):
            poly_from_json({"vars": 1})
        with pytest.raises(ParseError):
            poly_from_json({"vars": 1, "terms": [{"coeff": "x", "exp": [1]}]})
        with pytest.raises(ParseError):
            poly_from_json({"vars": 2, "terms": [{"coeff": "0", "exp": [1]}]})
