"""Fan morphisms as integer matrices, pullbacks of polynomials and ray
functions, geometricity of extensionally-given homomorphisms, and their
realization as actual fan morphisms.

A morphism from a fan X (ambient n) to a fan Y (ambient m) is an m x n
integer matrix sending every ray of X into the support of Y (the origin
counts).  Pulling a polynomial back substitutes the j-th target variable
by the monomial with exponent row j of the matrix, so evaluation commutes:
pullback(Q) at p equals Q at T.p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    BadParameters,
    CompositionMismatch,
    DimensionMismatch,
    InvalidMorphism,
    NoIntegerSolution,
    NotGeometric,
    SupportViolation,
)
from .evalmap import RayFunction, eval_map, generator_matrix
from .fan import WeightedFan, support_contains
from .intlat import IntMatrix, lattice_solve
from .laurent import LaurentPoly


def validate_morphism(T: IntMatrix, X: WeightedFan, Y: WeightedFan) -> bool:
    """True iff T maps every ray direction of X into the support of Y."""
    if T.cols != X.ambient_dim or T.rows != Y.ambient_dim:
        raise DimensionMismatch(
            f"{T.rows}x{T.cols} matrix between dimensions {X.ambient_dim} -> {Y.ambient_dim}"
        )
    return all(support_contains(Y, T.apply(ray.direction)) for ray in X.rays)


@dataclass(frozen=True)
class FanMorphism:
    """Support-preserving integer-linear map between two fans."""

    source: WeightedFan
    target: WeightedFan
    matrix: IntMatrix

    def __post_init__(self):
        if not validate_morphism(self.matrix, self.source, self.target):
            bad = next(
                ray.label()
                for ray in self.source.rays
                if not support_contains(self.target, self.matrix.apply(ray.direction))
            )
            raise InvalidMorphism(f"image of ray {bad} leaves the target support")

    def apply(self, v) -> tuple[int, ...]:
        return self.matrix.apply(v)


def pullback_poly(mu: FanMorphism, Q: LaurentPoly) -> LaurentPoly:
    """Substitute each target variable y_j by the monomial x^{row j}."""
    T = mu.matrix
    if Q.num_vars != T.rows:
        raise DimensionMismatch(f"polynomial in {Q.num_vars} variables pulled back along {T.rows} rows")
    n = T.cols
    items = []
    for v, c in Q.terms:
        # exponent v pulls back to sum_j v_j * (row j of T)
        items.append((tuple(sum(v[j] * T.data[j][i] for j in range(T.rows)) for i in range(n)), c))
    return LaurentPoly.make(n, items)


def pullback_evalmap(mu: FanMorphism, f: LaurentPoly) -> RayFunction:
    """Pull the weighted evaluation of f on the target back to the source:
    rho |-> w_rho * f(T d_rho).  Equals eval_map of pullback_poly."""
    if f.num_vars != mu.target.ambient_dim:
        raise DimensionMismatch(
            f"polynomial in {f.num_vars} variables on a target of dimension {mu.target.ambient_dim}"
        )
    if not f.is_boolean:
        from .errors import NonBooleanInput

        raise NonBooleanInput("weighted evaluation needs every coefficient equal to 0")
    if not f:
        return RayFunction(mu.source, None)
    return RayFunction(
        mu.source,
        tuple(ray.weight * int(f.eval(mu.apply(ray.direction))) for ray in mu.source.rays),
    )


def compose(mu2: FanMorphism, mu1: FanMorphism) -> FanMorphism:
    """The morphism T2.T1, defined when mu1's target is mu2's source."""
    if mu1.target != mu2.source:
        raise CompositionMismatch("target fan of the first morphism must equal source of the second")
    return FanMorphism(mu1.source, mu2.target, mu2.matrix @ mu1.matrix)


@dataclass(frozen=True)
class HomSpec:
    """Extensional homomorphism data: for each coordinate function of the
    source fan's ambient space, its image as a degree-zero ray function on
    the target fan.

    A realization, when it exists, is a FanMorphism *from* ``target``
    *to* ``source`` (pullbacks are contravariant).
    """

    source: WeightedFan
    target: WeightedFan
    images: tuple[RayFunction, ...]

    def __post_init__(self):
        if len(self.images) != self.source.ambient_dim:
            raise DimensionMismatch(
                f"{len(self.images)} images for {self.source.ambient_dim} source coordinates"
            )
        for H in self.images:
            if H.fan != self.target:
                raise DimensionMismatch("every image must be a ray function on the target fan")
            if H.degree() != 0:
                raise BadParameters("generator images must have degree 0")


def induced_homspec(mu: FanMorphism) -> HomSpec:
    """The generator images of mu's pullback (always geometric)."""
    m = mu.target.ambient_dim
    images = []
    for j in range(m):
        e = [0] * m
        e[j] = 1
        images.append(pullback_evalmap(mu, LaurentPoly.monomial(m, e)))
    return HomSpec(mu.target, mu.source, tuple(images))


def check_geometric(h: HomSpec) -> bool:
    """True iff at every target ray the stacked image vector is a
    nonnegative rational multiple of some source generator column."""
    m = h.source.ambient_dim
    source_gens = [ray.generator for ray in h.source.rays]
    for idx in range(len(h.target.rays)):
        vec = [h.images[i].values[idx] for i in range(m)]
        if not any(vec):
            continue
        if not any(_positive_multiple(vec, gen) for gen in source_gens):
            return False
    return True


def _positive_multiple(vec, gen) -> bool:
    t = None
    for v, g in zip(vec, gen):
        if g == 0:
            if v != 0:
                return False
        else:
            ratio = Fraction(v, g)
            if t is None:
                t = ratio
            elif ratio != t:
                return False
    return t is not None and t > 0


def realize_morphism(h: HomSpec) -> FanMorphism:
    """Build the fan morphism whose pullback sends each source coordinate
    to the prescribed image.

    Solves row_i(T) . gen(rho) = H_i(rho) over the integers simultaneously
    for all rays rho of the target fan, then checks support preservation.
    Only the action on the target's support is contractual; off the span
    of the generators the integer solution is the canonical Hermite one.
    """
    if not check_geometric(h):
        raise NotGeometric("some image vector leaves the cone of the source generators")
    X, Y = h.target, h.source
    A = IntMatrix.from_rows([list(ray.generator) for ray in X.rays])  # k x n
    rows = []
    for i, H in enumerate(h.images):
        t = lattice_solve(A, H.values)
        if t is None:
            raise NoIntegerSolution(
                f"image {i} is not an integer combination of the target generators"
            )
        rows.append(list(t))
    T = IntMatrix.from_rows(rows)
    try:
        mu = FanMorphism(X, Y, T)
    except InvalidMorphism as exc:
        raise SupportViolation(str(exc)) from exc
    for i, H in enumerate(h.images):
        got = tuple(sum(T.data[i][j] * gen[j] for j in range(X.ambient_dim)) for gen in
                    (ray.generator for ray in X.rays))
        assert got == H.values, "lattice solve must reproduce the image on every ray"
    return mu


def morphism_from_json(obj: dict, X: WeightedFan, Y: WeightedFan) -> FanMorphism:
    T = IntMatrix.from_json({"data": obj["matrix"]})
    return FanMorphism(X, Y, T)


def extract_ray_map(mu: FanMorphism) -> dict[str, Optional[str]]:
    """For each source ray, the label of the target ray its image lies on
    (None when it collapses to the origin)."""
    out = {}
    for ray in mu.source.rays:
        img = mu.apply(ray.direction)
        if not any(img):
            out[ray.label()] = None
            continue
        for tray in mu.target.rays:
            if _positive_multiple(list(img), tray.direction):
                out[ray.label()] = tray.label()
                break
    return out
