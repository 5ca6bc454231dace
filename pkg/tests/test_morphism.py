import random

import pytest

from oracles import rand_boolean_poly, rand_morphism, rand_point, rand_unimodular
from tropfan import (
    BadParameters,
    CompositionMismatch,
    DimensionMismatch,
    FanMorphism,
    HomSpec,
    IntMatrix,
    InvalidMorphism,
    LaurentPoly,
    NoIntegerSolution,
    NotGeometric,
    RayFunction,
    WeightedFan,
    check_geometric,
    compose,
    eval_map,
    fn_eq,
    induced_homspec,
    parse_poly_text,
    pullback_evalmap,
    pullback_poly,
    realize_morphism,
    standard_model,
    validate_morphism,
)
from tropfan.morphism import extract_ray_map

L23 = standard_model(2, 3)
Y = WeightedFan.build(2, [((1, 2), 1), ((3, 1), 1), ((-4, -3), 1)])
Z = WeightedFan.build(2, [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])
T_LY = IntMatrix.from_rows([[1, 3], [2, 1]])


class TestValidate:
    def test_identity(self):
        assert validate_morphism(IntMatrix.identity(2), L23, L23)

    def test_L23_onto_Y(self):
        assert validate_morphism(T_LY, L23, Y)
        assert T_LY.apply((-1, -1)) == (-4, -3)

    def test_L23_into_Z_fails(self):
        assert not validate_morphism(IntMatrix.identity(2), L23, Z)

    def test_dims(self):
        with pytest.raises(DimensionMismatch):
            validate_morphism(IntMatrix.from_rows([[1, 0, 0]]), L23, Y)

    def test_constructor_enforces_support(self):
        with pytest.raises(InvalidMorphism):
            FanMorphism(L23, Z, IntMatrix.identity(2))

    def test_collapse_to_origin_allowed(self):
        X = WeightedFan.build(1, [((1,), 1), ((-1,), 1)])
        mu = FanMorphism(X, X, IntMatrix.from_rows([[0]]))
        assert extract_ray_map(mu) == {"(1)": None, "(-1)": None}


class TestPullback:
    def test_row_substitution(self):
        mu = FanMorphism(L23, Y, T_LY)
        y1 = LaurentPoly.monomial(2, (1, 0))
        assert pullback_poly(mu, y1).support() == ((1, 3),)
        y2 = LaurentPoly.monomial(2, (0, 1))
        assert pullback_poly(mu, y2).support() == ((2, 1),)

    def test_identity_morphism(self):
        mu = FanMorphism(L23, L23, IntMatrix.identity(2))
        f = parse_poly_text("0 + x + y^2", 2)
        assert pullback_poly(mu, f) == f
        assert pullback_evalmap(mu, f) == eval_map(L23, f)

    def test_eval_identity_random(self):
        rng = random.Random(61)
        for _ in range(80):
            mu = rand_morphism(rng)
            Q = rand_boolean_poly(rng, mu.target.ambient_dim)
            p = rand_point(rng, mu.source.ambient_dim)
            Tp = tuple(
                sum(mu.matrix.data[i][j] * p[j] for j in range(mu.matrix.cols))
                for i in range(mu.matrix.rows)
            )
            assert pullback_poly(mu, Q).eval(p) == Q.eval(Tp)

    def test_commutes_with_eval_map(self):
        rng = random.Random(62)
        for _ in range(80):
            mu = rand_morphism(rng)
            f = rand_boolean_poly(rng, mu.target.ambient_dim)
            assert pullback_evalmap(mu, f) == eval_map(mu.source, pullback_poly(mu, f))

    def test_collapsed_ray_value_is_zero(self):
        X = WeightedFan.build(1, [((1,), 1), ((-1,), 1)])
        mu = FanMorphism(X, X, IntMatrix.from_rows([[0]]))
        f = parse_poly_text("x + x^-1", 1)
        assert pullback_evalmap(mu, f).values == (0, 0)

    def test_bottom_pulls_back_to_bottom(self):
        mu = FanMorphism(L23, Y, T_LY)
        assert pullback_evalmap(mu, LaurentPoly.zero(2)).is_bottom


class TestCompose:
    def test_mismatch(self):
        mu = FanMorphism(L23, Y, T_LY)
        with pytest.raises(CompositionMismatch):
            compose(mu, mu)

    def test_identity_neutral(self):
        mu = FanMorphism(L23, Y, T_LY)
        ident = FanMorphism(L23, L23, IntMatrix.identity(2))
        assert compose(mu, ident).matrix == T_LY

    def test_contravariance(self):
        rng = random.Random(63)
        done = 0
        while done < 25:
            mu1 = rand_morphism(rng)
            # build a second leg out of mu1's target
            T2 = IntMatrix.from_rows(
                [[rng.randint(-2, 2) for _ in range(mu1.target.ambient_dim)] for _ in range(2)]
            )
            images = [T2.apply(r.direction) for r in mu1.target.rays]
            nz = [tuple(v) for v in images if any(v)]
            if not nz:
                continue
            from tropfan import primitive

            try:
                Y2 = WeightedFan.build(2, [(list(primitive(d)[1]), 1) for d in set(nz)])
                mu2 = FanMorphism(mu1.target, Y2, T2)
            except Exception:
                continue
            Q = rand_boolean_poly(rng, 2)
            lhs = pullback_poly(compose(mu2, mu1), Q)
            rhs = pullback_poly(mu1, pullback_poly(mu2, Q))
            assert fn_eq(lhs, rhs)
            done += 1

    def test_associative(self):
        a = IntMatrix.from_rows([[1, 0], [1, 1]])
        b = IntMatrix.from_rows([[2, 1], [1, 1]])
        assert ((a @ b) @ T_LY) == (a @ (b @ T_LY))


class TestHomSpec:
    def test_requires_degree_zero(self):
        with pytest.raises(BadParameters):
            HomSpec(Y, L23, (RayFunction(L23, (1, 0, 0)), RayFunction(L23, (0, 0, 0))))

    def test_requires_matching_count(self):
        with pytest.raises(DimensionMismatch):
            HomSpec(Y, L23, (RayFunction(L23, (0, 0, 0)),))

    def test_images_must_live_on_target(self):
        with pytest.raises(DimensionMismatch):
            HomSpec(Y, L23, (RayFunction(Y, (0, 0, 0)), RayFunction(L23, (0, 0, 0))))


class TestGeometric:
    def test_induced_always_geometric(self):
        rng = random.Random(64)
        for _ in range(60):
            mu = rand_morphism(rng)
            assert check_geometric(induced_homspec(mu))

    def test_non_proportional_column_fails(self):
        # image column (1,1) at the first ray of L23: no Y generator direction
        h = HomSpec(
            Y,
            L23,
            (RayFunction(L23, (1, 0, -1)), RayFunction(L23, (1, -1, 0))),
        )
        assert not check_geometric(h)

    def test_generator_change_invariance(self):
        # replacing the source fan's generators with a unimodular re-mix of
        # the coordinates leaves geometricity unchanged
        rng = random.Random(65)
        for _ in range(40):
            mu = rand_morphism(rng)
            h = induced_homspec(mu)
            U = rand_unimodular(rng, h.source.ambient_dim)
            mixed = tuple(
                RayFunction(
                    h.target,
                    tuple(
                        sum(U.data[i][j] * h.images[j].values[r] for j in range(U.cols))
                        for r in range(len(h.target.rays))
                    ),
                )
                for i in range(U.rows)
            )
            # mixing generator images = composing with a lattice isomorphism:
            # still induced by a morphism, hence still geometric
            gens = [list(ray.generator) for ray in h.source.rays]
            mixed_fan_gens = [U.apply(g) for g in gens]
            try:
                from tropfan import primitive

                src2 = WeightedFan.build(
                    h.source.ambient_dim,
                    [(list(g), 1) for g in mixed_fan_gens],
                )
            except Exception:
                continue
            h2 = HomSpec(src2, h.target, mixed)
            assert check_geometric(h2)


class TestRealize:
    def test_identity_round_trip(self):
        ident = FanMorphism(L23, L23, IntMatrix.identity(2))
        mu = realize_morphism(induced_homspec(ident))
        for ray in L23.rays:
            assert mu.apply(ray.direction) == ray.direction

    def test_round_trip_random(self):
        rng = random.Random(66)
        for _ in range(60):
            mu = rand_morphism(rng)
            back = realize_morphism(induced_homspec(mu))
            assert back.source == mu.source and back.target == mu.target
            for ray in mu.source.rays:
                assert back.apply(ray.direction) == mu.apply(ray.direction)

    def test_ray_bijection_with_unimodular_image(self):
        # L23 mapped by a determinant -5 matrix is NOT realizable back...
        # but a unimodular image is, with the ray map matching the bijection
        U = IntMatrix.from_rows([[1, 1], [0, 1]])
        gens = [U.apply(r.direction) for r in L23.rays]
        X = WeightedFan.build(2, [(g, 1) for g in gens])
        mu = FanMorphism(L23, X, U)
        back = realize_morphism(induced_homspec(mu))
        ray_map = extract_ray_map(back)
        for ray in L23.rays:
            img = U.apply(ray.direction)
            from tropfan import primitive

            assert ray_map[ray.label()] == "(" + ",".join(map(str, primitive(img)[1])) + ")"

    def test_not_geometric(self):
        h = HomSpec(
            Y,
            L23,
            (RayFunction(L23, (1, 0, -1)), RayFunction(L23, (1, -1, 0))),
        )
        with pytest.raises(NotGeometric):
            realize_morphism(h)

    def test_no_integer_solution(self):
        # on Y the degree-0 function (1, 0, -1) needs the fractional
        # exponent (-2/5, 1/5); realizing it as a coordinate image must fail.
        # It IS geometric: each entry is a multiple of a generator of the
        # 1-dimensional source.
        W = WeightedFan.build(1, [((1,), 1), ((-1,), 1)])
        h = HomSpec(W, Y, (RayFunction(Y, (1, 0, -1)),))
        assert check_geometric(h)
        with pytest.raises(NoIntegerSolution):
            realize_morphism(h)


def test_induced_homspec_shape():
    mu = FanMorphism(L23, Y, T_LY)
    h = induced_homspec(mu)
    assert h.source == Y and h.target == L23
    assert len(h.images) == 2
    assert h.images[0].values == (-4, 3, 1)
    assert h.images[1].values == (-3, 1, 2)
