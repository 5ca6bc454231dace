"""The weighted evaluation of Boolean polynomials on a fan's rays, the
ray-function semiring it lands in, fan reconstruction, realizability,
kernel equality, lattice image membership, and the smoothness test.

A ray function assigns an integer to every ray (or is the all-bottom
function).  Evaluating a Boolean polynomial f on a fan X gives the ray
function rho |-> w_rho * f(d_rho); the columns w_rho * d_rho form the
fan's generator matrix, from which the fan itself is recoverable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import _lp
from .errors import (
    DimensionMismatch,
    Inconclusive,
    NonBooleanInput,
    NotBalanced,
    NotRealizable,
    ParseError,
)
from .fan import WeightedFan, check_balancing, primitive
from .intlat import IntMatrix, snf
from .laurent import LaurentPoly
from .semiring import NEG_INF, TropValue


@dataclass(frozen=True)
class RayFunction:
    """Integer value per ray of a fixed fan; values None means the bottom
    function (every ray at -inf)."""

    fan: WeightedFan
    values: Optional[tuple[int, ...]]

    def __post_init__(self):
        if self.values is not None:
            if len(self.values) != len(self.fan.rays):
                raise DimensionMismatch(
                    f"{len(self.values)} values for {len(self.fan.rays)} rays"
                )
            object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def is_bottom(self) -> bool:
        return self.values is None

    def degree(self) -> TropValue:
        """Sum of the values; the bottom function has degree -inf."""
        if self.values is None:
            return NEG_INF
        return sum(self.values)

    def __getitem__(self, i: int) -> Union[int, object]:
        if self.values is None:
            return NEG_INF
        return self.values[i]

    def to_json(self) -> dict:
        names = self.fan.ray_labels()
        if self.values is None:
            return {"rays": names, "values": ["-inf"] * len(names)}
        return {"rays": names, "values": list(self.values)}

    @classmethod
    def from_json(cls, fan: WeightedFan, obj: dict) -> "RayFunction":
        try:
            values = list(obj["values"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad ray function object: {exc}") from exc
        if "rays" in obj and list(obj["rays"]) != fan.ray_labels():
            raise ParseError("ray names do not match the fan's sorted rays")
        bottoms = [v == "-inf" for v in values]
        if all(bottoms) and values:
            return cls(fan, None)
        if any(bottoms):
            raise ParseError("-inf entries are only allowed when every entry is -inf")
        try:
            return cls(fan, tuple(int(v) for v in values))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad ray function values: {exc}") from exc


def degree(F: RayFunction) -> TropValue:
    return F.degree()


def _require_boolean(f: LaurentPoly, X: WeightedFan):
    if f.num_vars != X.ambient_dim:
        raise DimensionMismatch(
            f"polynomial in {f.num_vars} variables on a fan of dimension {X.ambient_dim}"
        )
    if not f.is_boolean:
        raise NonBooleanInput("weighted evaluation needs every coefficient equal to 0")


def eval_map(X: WeightedFan, f: LaurentPoly) -> RayFunction:
    """rho |-> w_rho * f(d_rho); the bottom polynomial maps to bottom."""
    _require_boolean(f, X)
    if not f:
        return RayFunction(X, None)
    return RayFunction(X, tuple(ray.weight * int(f.eval(ray.direction)) for ray in X.rays))


def generator_matrix(X: WeightedFan) -> IntMatrix:
    """Columns are the weighted primitive directions, in ray order."""
    gens = [ray.generator for ray in X.rays]
    return IntMatrix.from_rows([[g[i] for g in gens] for i in range(X.ambient_dim)])


def is_realizable(M: IntMatrix) -> bool:
    """True iff M is the generator matrix of some fan: each row sums to 0,
    no column is zero, and no column is a positive multiple of another."""
    if any(sum(row) != 0 for row in M.data):
        return False
    seen = set()
    for j in range(M.cols):
        col = M.col(j)
        if not any(col):
            return False
        _, d = primitive(col)
        if d in seen:
            return False
        seen.add(d)
    return True


def reconstruct_fan(M: IntMatrix) -> WeightedFan:
    """Inverse of generator_matrix: column = weight * primitive direction."""
    if not is_realizable(M):
        raise NotRealizable("matrix has a zero column, positively parallel columns, or unbalanced rows")
    return WeightedFan.build(M.rows, [(M.col(j), 1) for j in range(M.cols)])


def ker_eq(X: WeightedFan, f: LaurentPoly, g: LaurentPoly) -> bool:
    """True iff f and g agree on the support of X, i.e. at every ray
    direction (homogeneity extends this along each ray)."""
    _require_boolean(f, X)
    _require_boolean(g, X)
    return all(f.eval(ray.direction) == g.eval(ray.direction) for ray in X.rays)


def linear_relations(M: IntMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the rational relations among the columns of M."""
    rows = [[Fraction(x) for x in row] for row in M.data]
    return _lp.kernel_basis(rows, M.cols)


@dataclass(frozen=True)
class SmoothReport:
    smooth: bool
    reason: Optional[str] = None


def is_smooth(X: WeightedFan) -> SmoothReport:
    """Decide smoothness at the origin.

    Requires balancing.  Smooth iff every weight is 1 and the rows of the
    generator matrix generate the full degree-zero lattice; the latter is
    tested by dropping the lex-last ray's coordinate (an isomorphism of
    the degree-zero lattice with Z^{k-1} for balanced inputs) and asking
    the Smith form of the remaining n x (k-1) matrix for k-1 unit
    invariant factors.
    """
    if not check_balancing(X):
        raise NotBalanced("smoothness is only defined for balanced fans")
    for ray in X.rays:
        if ray.weight != 1:
            return SmoothReport(False, f"weight {ray.weight} on ray {ray.label()}")
    k = len(X.rays)
    gens = [ray.generator for ray in X.rays[:-1]]
    M = IntMatrix.from_rows([[g[i] for g in gens] for i in range(X.ambient_dim)])
    _, D, _ = snf(M)
    factors = [D.data[i][i] for i in range(min(D.rows, D.cols)) if D.data[i][i] != 0]
    if len(factors) < k - 1:
        return SmoothReport(False, f"rank {len(factors)} < {k - 1}")
    index = math.prod(factors)
    if index != 1:
        return SmoothReport(False, f"lattice index {index}")
    return SmoothReport(True, None)


def image_membership(
    X: WeightedFan, G: RayFunction, bound: int = 64
) -> Optional[LaurentPoly]:
    """Decide whether G is the weighted evaluation of some Boolean
    polynomial, returning such a polynomial or None for a proven
    non-member.

    G is a member iff for every ray a some integer z satisfies
    z . F(b) <= G(b) at all rays b with equality at a; the witness is then
    the max of the monomials x^z.  Each per-ray search enumerates integer
    points inside the exact rational bounds, clamped to |z|_inf <= bound;
    a miss without clamping (or rational infeasibility) is a proof, a miss
    after clamping raises Inconclusive.
    """
    if G.fan != X:
        raise DimensionMismatch("ray function belongs to a different fan")
    if G.is_bottom:
        return LaurentPoly.zero(X.ambient_dim)
    n = X.ambient_dim
    gens = [ray.generator for ray in X.rays]
    exponents = []
    unknown = False
    for a in range(len(X.rays)):
        cons = []
        for b, gen in enumerate(gens):
            cons.append((tuple(Fraction(x) for x in gen), Fraction(G.values[b]), False))
        cons.append(
            (tuple(Fraction(-x) for x in gens[a]), Fraction(-G.values[a]), False)
        )
        z, truncated = _lp.integer_point_search(cons, n, bound)
        if z is None:
            if truncated:
                unknown = True
            else:
                return None
        else:
            exponents.append(z)
    if unknown:
        raise Inconclusive(f"no decision within |z| <= {bound}; raise the bound")
    witness = LaurentPoly.make(n, [(z, 0) for z in exponents])
    assert eval_map(X, witness).values == G.values, "witness must reproduce the input"
    return witness
