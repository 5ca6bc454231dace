"""Max-plus arithmetic: the tropical semifield, its Boolean subsemifield,
and the graded extension of an arbitrary carrier semiring.

Tropical values are exact rationals plus a distinguished bottom element
NEG_INF that is neutral for max and absorbing for +.  NEG_INF orders below
every rational and absorbs mixed additions, so ``max`` and ``+`` literally
are the two semifield operations.

The graded extension pairs a nonzero carrier element with a rational
grade: addition keeps the part of strictly larger grade and merges carrier
parts on grade ties; multiplication multiplies parts and adds grades.  A
carrier is any type whose values support ``+``, ``*``, ``==`` and whose
zero (if representable at all) is falsy; sums and products of nonzero
carrier elements must be nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union


class _NegInf:
    """The bottom element; a singleton comparing below every rational."""

    __slots__ = ()

    def __lt__(self, other):
        return not isinstance(other, _NegInf)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInf)

    def __eq__(self, other):
        return isinstance(other, _NegInf)

    def __hash__(self):
        return hash("tropfan.-inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("bottom has no negation")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()

TropValue = Union[Fraction, int, _NegInf]

#: the Boolean subsemifield is {NEG_INF, BOOL_ONE}
BOOL_ONE = Fraction(0)


def as_trop(v) -> TropValue:
    """Coerce to an exact tropical value (Fraction or NEG_INF)."""
    if isinstance(v, _NegInf):
        return NEG_INF
    if isinstance(v, float):
        # 0.1 would silently become 3602879701896397/36028797018963968
        raise TypeError("floats are not exact; pass Fraction, int, or a rational string")
    return Fraction(v)


def trop_add(a: TropValue, b: TropValue) -> TropValue:
    return max(a, b)


def trop_mul(a: TropValue, b: TropValue) -> TropValue:
    return a + b  # NEG_INF absorbs via its __add__/__radd__


def trop_sum(values) -> TropValue:
    out: TropValue = NEG_INF
    for v in values:
        out = max(out, v)
    return out


def is_bool_value(v: TropValue) -> bool:
    return isinstance(v, _NegInf) or v == 0


@dataclass(frozen=True)
class TExt:
    """Element (part, grade) of the graded extension of a carrier semiring.

    The bottom element is the singleton TEXT_BOTTOM (part None); every
    other element carries a nonzero ``part`` and an exact rational grade.
    Build non-bottom values through :func:`text`, which enforces both.
    """

    part: Any
    grade: TropValue

    @property
    def is_bottom(self) -> bool:
        return self.part is None

    def __bool__(self) -> bool:
        return self.part is not None

    def __add__(self, other: "TExt") -> "TExt":
        return text_add(self, other)

    def __mul__(self, other: "TExt") -> "TExt":
        return text_mul(self, other)


TEXT_BOTTOM = TExt(None, NEG_INF)


def text(part, grade) -> TExt:
    if not part:
        raise ValueError("carrier part of a graded element must be nonzero")
    return TExt(part, as_trop(grade))


def text_add(x: TExt, y: TExt) -> TExt:
    if x.is_bottom:
        return y
    if y.is_bottom:
        return x
    if x.grade > y.grade:
        return x
    if y.grade > x.grade:
        return y
    return TExt(x.part + y.part, x.grade)


def text_mul(x: TExt, y: TExt) -> TExt:
    if x.is_bottom or y.is_bottom:
        return TEXT_BOTTOM
    return TExt(x.part * y.part, x.grade + y.grade)
