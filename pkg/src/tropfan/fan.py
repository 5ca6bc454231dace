"""Weighted one-dimensional ray fans: primitive directions, the balancing
condition, support membership, JSON I/O, and the standard smooth models.

A fan stores pairwise-distinct primitive integer directions with positive
integer weights, sorted lexicographically by direction so that equality is
set equality and every downstream matrix/output ordering is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadParameters, DimensionMismatch, ParseError, ZeroVector


def primitive(v: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Factor a nonzero integer vector as weight * primitive direction."""
    v = tuple(int(x) for x in v)
    if not any(v):
        raise ZeroVector("the zero vector has no direction")
    g = math.gcd(*(abs(x) for x in v))
    return g, tuple(x // g for x in v)


@dataclass(frozen=True)
class Ray:
    """Primitive integer direction with a positive integer weight."""

    direction: tuple[int, ...]
    weight: int

    def __post_init__(self):
        d = tuple(int(x) for x in self.direction)
        object.__setattr__(self, "direction", d)
        if not any(d):
            raise ZeroVector("ray direction may not be zero")
        if math.gcd(*(abs(x) for x in d)) != 1:
            raise BadParameters(f"direction {d} is not primitive")
        if not isinstance(self.weight, int) or self.weight < 1:
            raise BadParameters(f"weight must be a positive integer, got {self.weight!r}")

    @property
    def generator(self) -> tuple[int, ...]:
        """weight * direction — the column this ray contributes."""
        return tuple(self.weight * x for x in self.direction)

    def label(self) -> str:
        return "(" + ",".join(str(x) for x in self.direction) + ")"


@dataclass(frozen=True)
class WeightedFan:
    """Ambient dimension plus lex-sorted rays with distinct directions."""

    ambient_dim: int
    rays: tuple[Ray, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise BadParameters("ambient dimension must be at least 1")
        if not self.rays:
            raise BadParameters("a fan needs at least one ray")
        dirs = []
        for ray in self.rays:
            if len(ray.direction) != self.ambient_dim:
                raise DimensionMismatch(
                    f"ray {ray.direction} in ambient dimension {self.ambient_dim}"
                )
            dirs.append(ray.direction)
        if sorted(dirs) != list(dirs) or any(a == b for a, b in zip(dirs, dirs[1:])):
            raise BadParameters("rays must be lex-sorted with distinct directions")

    @classmethod
    def build(cls, ambient_dim: int, items: Iterable[tuple[Sequence[int], int]]) -> "WeightedFan":
        """Normalizing factory: primitivizes each direction, absorbing the
        extracted gcd into the weight; duplicate directions are an error."""
        rays = []
        seen = {}
        for vec, w in items:
            w = int(w)
            if w < 1:
                raise BadParameters(f"weight must be positive, got {w}")
            g, d = primitive(vec)
            if d in seen:
                raise BadParameters(f"duplicate ray direction {d}")
            seen[d] = True
            rays.append(Ray(d, w * g))
        rays.sort(key=lambda r: r.direction)
        return cls(ambient_dim, tuple(rays))

    def directions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r.direction for r in self.rays)

    def ray_labels(self) -> list[str]:
        return [r.label() for r in self.rays]

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "rays": [{"direction": list(r.direction), "weight": r.weight} for r in self.rays],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "WeightedFan":
        try:
            n = int(obj["ambient_dim"])
            items = [
                (tuple(int(x) for x in entry["direction"]), int(entry["weight"]))
                for entry in obj["rays"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad fan object: {exc}") from exc
        return cls.build(n, items)


def check_balancing(X: WeightedFan) -> bool:
    """True iff the weighted directions sum to the zero vector."""
    total = [0] * X.ambient_dim
    for ray in X.rays:
        for i, x in enumerate(ray.generator):
            total[i] += x
    return not any(total)


def standard_model(n: int, r: int) -> WeightedFan:
    """The balanced fan on e_1..e_{r-1} and e_0 = -(e_1 + ... + e_{r-1}),
    all weights 1, inside dimension n; requires 2 <= r <= n + 1."""
    if not 2 <= r <= n + 1:
        raise BadParameters(f"need 2 <= r <= n + 1, got r={r}, n={n}")
    items: list[tuple[list[int], int]] = []
    for i in range(r - 1):
        e = [0] * n
        e[i] = 1
        items.append((e, 1))
    items.append(([-1] * (r - 1) + [0] * (n - r + 1), 1))
    return WeightedFan.build(n, items)


def support_contains(X: WeightedFan, v: Sequence) -> bool:
    """True iff v is zero or a positive rational multiple of some ray
    direction."""
    if len(v) != X.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in dimension {X.ambient_dim}")
    v = [Fraction(x) for x in v]
    if not any(v):
        return True
    for ray in X.rays:
        t = None
        ok = True
        for vi, di in zip(v, ray.direction):
            if di == 0:
                if vi != 0:
                    ok = False
                    break
            else:
                ratio = vi / di
                if t is None:
                    t = ratio
                elif ratio != t:
                    ok = False
                    break
        if ok and t is not None and t > 0:
            return True
    return False
