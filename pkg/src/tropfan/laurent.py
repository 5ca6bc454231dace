"""Max-plus Laurent polynomials: arithmetic, evaluation, initial forms,
canonical function form, decidable function equality, and localization at
a point into the graded extension.

A polynomial is a sparse map from integer exponent vectors to rational
coefficients, read as p |-> max_u (a_u + u . p).  The empty map is the
bottom polynomial (the function identically NEG_INF); a stored coefficient
is never NEG_INF.

Canonicalization removes exactly the terms that never strictly attain the
maximum anywhere: term (u, a_u) is kept iff the strict system
a_u + u.p > a_v + v.p (over all other terms v) is feasible, decided in
exact rational arithmetic.  Two polynomials define the same function on
all of Q^n iff their canonical forms are structurally equal, which is what
makes CanonicalFn a usable semiring carrier for germs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import _lp
from .errors import (
    BadParameters,
    DimensionMismatch,
    EmptyPolynomial,
    ParseError,
)
from .semiring import NEG_INF, TEXT_BOTTOM, TExt, TropValue, as_trop

Term = tuple[tuple[int, ...], Fraction]


def _dot(u: Sequence[int], p: Sequence[Fraction]):
    return sum(a * b for a, b in zip(u, p))


@dataclass(frozen=True)
class LaurentPoly:
    """num_vars plus lex-sorted (exponent, coefficient) pairs."""

    num_vars: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise BadParameters("negative variable count")
        prev = None
        for u, c in self.terms:
            if len(u) != self.num_vars:
                raise DimensionMismatch(f"exponent {u} in {self.num_vars} variables")
            if isinstance(c, type(NEG_INF)):
                raise BadParameters("stored coefficient may not be bottom")
            if prev is not None and not (prev < u):
                raise BadParameters("terms must be strictly lex-sorted")
            prev = u

    # -- construction -----------------------------------------------------

    @classmethod
    def make(cls, num_vars: int, items: Iterable[tuple[Sequence[int], TropValue]]) -> "LaurentPoly":
        """Normalizing factory: merges duplicate exponents by max and drops
        bottom coefficients."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for u, c in items:
            u = tuple(int(e) for e in u)
            if len(u) != num_vars:
                raise DimensionMismatch(f"exponent {u} in {num_vars} variables")
            c = as_trop(c)
            if c == NEG_INF:
                continue
            if u not in acc or c > acc[u]:
                acc[u] = c
        return cls(num_vars, tuple(sorted(acc.items())))

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPoly":
        return cls(num_vars, ())

    @classmethod
    def one(cls, num_vars: int) -> "LaurentPoly":
        return cls.constant(num_vars, 0)

    @classmethod
    def constant(cls, num_vars: int, c) -> "LaurentPoly":
        return cls.make(num_vars, [((0,) * num_vars, c)])

    @classmethod
    def monomial(cls, num_vars: int, exp: Sequence[int], coeff=0) -> "LaurentPoly":
        return cls.make(num_vars, [(exp, coeff)])

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_boolean(self) -> bool:
        return all(c == 0 for _, c in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(u for u, _ in self.terms)

    def coeff(self, exp: Sequence[int]) -> TropValue:
        exp = tuple(int(e) for e in exp)
        for u, c in self.terms:
            if u == exp:
                return c
        return NEG_INF

    def _require_same_vars(self, other: "LaurentPoly"):
        if self.num_vars != other.num_vars:
            raise DimensionMismatch(
                f"polynomials in {self.num_vars} and {other.num_vars} variables"
            )

    # -- semiring operations -------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same_vars(other)
        return LaurentPoly.make(self.num_vars, list(self.terms) + list(other.terms))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same_vars(other)
        prods = [
            (tuple(a + b for a, b in zip(u, v)), cu + cv)
            for u, cu in self.terms
            for v, cv in other.terms
        ]
        return LaurentPoly.make(self.num_vars, prods)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise BadParameters("negative power of a polynomial")
        out = LaurentPoly.one(self.num_vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, a: Sequence) -> "LaurentPoly":
        """P(a + x): adds u.a to each coefficient."""
        a = [as_trop(v) for v in a]
        if len(a) != self.num_vars:
            raise DimensionMismatch(f"shift vector of length {len(a)}")
        return LaurentPoly.make(self.num_vars, [(u, c + _dot(u, a)) for u, c in self.terms])

    # -- evaluation ----------------------------------------------------------

    def eval(self, p: Sequence) -> TropValue:
        if len(p) != self.num_vars:
            raise DimensionMismatch(f"point of length {len(p)} in {self.num_vars} variables")
        p = [as_trop(v) for v in p]
        best: TropValue = NEG_INF
        for u, c in self.terms:
            v = c + _dot(u, p)
            if v > best:
                best = v
        return best

    def initial_form(self, p: Sequence) -> "LaurentPoly":
        """Sub-polynomial of the terms attaining the maximum at p."""
        if not self.terms:
            raise EmptyPolynomial("the bottom polynomial has no initial form")
        if len(p) != self.num_vars:
            raise DimensionMismatch(f"point of length {len(p)} in {self.num_vars} variables")
        p = [as_trop(v) for v in p]
        vals = [c + _dot(u, p) for u, c in self.terms]
        top = max(vals)
        kept = tuple(t for t, v in zip(self.terms, vals) if v == top)
        return LaurentPoly(self.num_vars, kept)

    def boolean_part(self) -> "LaurentPoly":
        """Same support, every coefficient replaced by the tropical one (0)."""
        return LaurentPoly(self.num_vars, tuple((u, Fraction(0)) for u, _ in self.terms))

    def __str__(self) -> str:
        return poly_to_text(self)


@dataclass(frozen=True)
class CanonicalFn:
    """Canonical representative of a polynomial's function class.

    Structural equality of CanonicalFn values decides equality as
    functions; produce them only through :func:`canonicalize`.  The
    arithmetic operators re-canonicalize, so CanonicalFn works as a
    carrier for graded (germ) arithmetic.
    """

    num_vars: int
    terms: tuple[Term, ...]

    @property
    def poly(self) -> LaurentPoly:
        return LaurentPoly(self.num_vars, self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "CanonicalFn") -> "CanonicalFn":
        return canonicalize(self.poly + other.poly)

    def __mul__(self, other: "CanonicalFn") -> "CanonicalFn":
        return canonicalize(self.poly * other.poly)

    def __str__(self) -> str:
        return poly_to_text(self.poly)


def _beats_all(term: Term, rivals: Iterable[Term], num_vars: int) -> Optional[tuple]:
    """A point where ``term`` strictly exceeds every rival term, or None."""
    u, a = term
    cons = []
    for v, b in rivals:
        # a + u.p > b + v.p  <=>  (v - u).p < a - b
        cons.append((tuple(x - y for x, y in zip(v, u)), Fraction(a) - Fraction(b), True))
    return _lp.find_point(cons, num_vars)


def canonicalize(P: LaurentPoly) -> CanonicalFn:
    """Drop exactly the terms dominated everywhere by the max of the rest."""
    kept = tuple(
        t
        for i, t in enumerate(P.terms)
        if _beats_all(t, (s for j, s in enumerate(P.terms) if j != i), P.num_vars) is not None
    )
    return CanonicalFn(P.num_vars, kept)


def fn_eq(P: LaurentPoly, Q: LaurentPoly) -> bool:
    """True iff P and Q agree as functions everywhere."""
    P._require_same_vars(Q)
    return canonicalize(P) == canonicalize(Q)


def fn_witness(P: LaurentPoly, Q: LaurentPoly) -> Optional[tuple]:
    """None when fn_eq; otherwise a rational point where the values differ."""
    P._require_same_vars(Q)
    cp, cq = canonicalize(P), canonicalize(Q)
    if cp == cq:
        return None

    def scan(A: CanonicalFn, B: CanonicalFn) -> Optional[tuple]:
        bset = set(B.terms)
        for i, term in enumerate(A.terms):
            if term in bset:
                continue
            rivals = [s for j, s in enumerate(A.terms) if j != i] + list(B.terms)
            pt = _beats_all(term, rivals, A.num_vars)
            if pt is not None:
                return pt
        return None

    # Wherever the two functions differ, on a nearby generic point the
    # larger side's unique dominating canonical term beats every term of
    # both forms, so one of the scans below must succeed.
    pt = scan(cp, cq)
    if pt is None:
        pt = scan(cq, cp)
    assert pt is not None, "differing canonical forms must admit a separating point"
    return pt


def germ_localize(P: LaurentPoly, p: Sequence) -> TExt:
    """The germ of P at p: (canonical Boolean initial form, value at p),
    or the bottom element for the bottom polynomial."""
    if len(p) != P.num_vars:
        raise DimensionMismatch(f"point of length {len(p)} in {P.num_vars} variables")
    if not P:
        return TEXT_BOTTOM
    return TExt(canonicalize(P.initial_form(p).boolean_part()), as_trop(P.eval(p)))


def germ_eq(P: LaurentPoly, Q: LaurentPoly, p: Sequence) -> bool:
    """True iff P and Q agree on some neighborhood of p."""
    P._require_same_vars(Q)
    return germ_localize(P, p) == germ_localize(Q, p)


def germ_safe_radius(P: LaurentPoly, p: Sequence) -> Fraction:
    """A radius delta > 0 such that P equals its initial form at p on the
    whole open max-norm ball of radius delta around p.

    With s = min slack of the dropped terms and M = max pairwise 1-norm of
    exponent differences, delta = s / (1 + M) works: moving q from p by
    less than delta changes any difference of two term values by less than
    M * delta < s, so kept terms keep beating dropped ones.
    """
    if not P:
        raise EmptyPolynomial("the bottom polynomial has no localization radius")
    if len(p) != P.num_vars:
        raise DimensionMismatch(f"point of length {len(p)} in {P.num_vars} variables")
    p = [as_trop(v) for v in p]
    vals = [c + _dot(u, p) for u, c in P.terms]
    top = max(vals)
    slacks = [top - v for v in vals if v < top]
    if not slacks:
        return Fraction(1)
    spread = max(
        sum(abs(a - b) for a, b in zip(u, v))
        for i, (u, _) in enumerate(P.terms)
        for v, _ in P.terms[i + 1 :]
    )
    return min(slacks) / (1 + spread)


# ---------------------------------------------------------------------------
# Text and JSON formats.
# ---------------------------------------------------------------------------

_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}
_NAME_RE = re.compile(r"^([a-z]+?)(\d*)$")
_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def _var_index(name: str) -> int:
    m = _NAME_RE.match(name)
    if m:
        base, digits = m.groups()
        if base == "x" and digits:
            idx = int(digits)
            if idx < 1:
                raise ParseError(f"variable indices start at 1, got {name!r}")
            return idx
        if not digits and base in _ALIASES:
            return _ALIASES[base]
    raise ParseError(f"unknown variable {name!r} (use x1..xn or x, y, z, w)")


def _var_name(i: int, num_vars: int) -> str:
    if num_vars <= 4:
        return "xyzw"[i]
    return f"x{i + 1}"


def parse_poly_text(text: str, num_vars: Optional[int] = None) -> LaurentPoly:
    """Parse ``c*x1^e1*...`` terms joined by '+'; '-inf' is the bottom
    polynomial.  An omitted coefficient means the tropical one (0)."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    raw_terms = []
    max_idx = 0
    for piece in s.split("+"):
        piece = piece.strip()
        if not piece:
            raise ParseError(f"empty term in {text!r}")
        if piece == "-inf":
            continue
        coeff = Fraction(0)
        exps: dict[int, int] = {}
        for factor in piece.split("*"):
            factor = factor.strip()
            if not factor:
                raise ParseError(f"empty factor in term {piece!r}")
            if _RATIONAL_RE.match(factor):
                coeff += Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            idx = _var_index(name.strip())
            try:
                e = int(power.strip()) if power else 1
            except ValueError as exc:
                raise ParseError(f"bad exponent in factor {factor!r}") from exc
            exps[idx] = exps.get(idx, 0) + e
            max_idx = max(max_idx, idx)
        raw_terms.append((coeff, exps))
    n = num_vars if num_vars is not None else max(max_idx, 1)
    if max_idx > n:
        raise ParseError(f"variable x{max_idx} out of range for {n} variables")
    return LaurentPoly.make(
        n,
        [
            (tuple(exps.get(i + 1, 0) for i in range(n)), coeff)
            for coeff, exps in raw_terms
        ],
    )


def poly_to_text(P: LaurentPoly) -> str:
    if not P:
        return "-inf"
    pieces = []
    for u, c in P.terms:
        factors = []
        if c != 0:
            factors.append(str(c))
        for i, e in enumerate(u):
            if e:
                name = _var_name(i, P.num_vars)
                factors.append(name if e == 1 else f"{name}^{e}")
        pieces.append("*".join(factors) or "0")
    return " + ".join(pieces)


def poly_to_json(P: LaurentPoly) -> dict:
    return {
        "vars": P.num_vars,
        "terms": [{"coeff": str(c), "exp": list(u)} for u, c in P.terms],
    }


def poly_from_json(obj: dict) -> LaurentPoly:
    try:
        n = int(obj["vars"])
        items = []
        for t in obj["terms"]:
            raw = t["coeff"]
            if isinstance(raw, str) and raw.strip() == "-inf":
                continue
            items.append((tuple(int(e) for e in t["exp"]), Fraction(str(raw))))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad polynomial object: {exc}") from exc
    try:
        return LaurentPoly.make(n, items)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from exc


def parse_point(text: str, num_vars: Optional[int] = None) -> tuple[Fraction, ...]:
    """Comma-separated rational coordinates."""
    try:
        point = tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad point {text!r}: {exc}") from exc
    if num_vars is not None and len(point) != num_vars:
        raise ParseError(f"point {text!r} has {len(point)} coordinates, expected {num_vars}")
    return point
