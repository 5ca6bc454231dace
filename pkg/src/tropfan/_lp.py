"""Exact rational linear feasibility and elimination over Fraction.

A constraint on k variables is a triple ``(coeffs, rhs, strict)`` read as
``coeffs . x < rhs`` when ``strict`` else ``coeffs . x <= rhs``.

Low-dimensional systems (the common case: ambient dimension of a fan or a
polynomial's variable count) are decided by Fourier-Motzkin elimination,
which also yields exact per-variable bounds for witness extraction and
integer enumeration.  Systems in more variables fall back to an exact
two-phase simplex maximizing a slack margin.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

Constraint = tuple[tuple, Fraction, bool]

FM_MAX_VARS = 4


def _normalize(con: Constraint) -> Constraint:
    """Scale so coefficients are coprime integers (rhs stays a Fraction)."""
    c, r, s = con
    c = tuple(Fraction(x) for x in c)
    r = Fraction(r)
    scale = math.lcm(*(x.denominator for x in c), r.denominator) if c else r.denominator
    c = tuple(x * scale for x in c)
    r = r * scale
    g = math.gcd(*(abs(int(x)) for x in c)) if c else 0
    if g > 1:
        c = tuple(x / g for x in c)
        r = r / g
    return (tuple(int(x) for x in c), r, s)


def _dedupe(cons: Sequence[Constraint]) -> Optional[list[Constraint]]:
    """Drop duplicates/tautologies; return None on a constant contradiction."""
    best: dict[tuple, Fraction] = {}
    for con in cons:
        c, r, s = _normalize(con)
        if not any(c):
            # constant constraint: 0 < r or 0 <= r
            if r < 0 or (s and r == 0):
                return None
            continue
        key = (c, s)
        if key not in best or r < best[key]:
            best[key] = r
    return [(c, r, s) for (c, s), r in best.items()]


def _eliminate(cons: Sequence[Constraint], k: int) -> list[Constraint]:
    """Project out variable k-1 from a system on k variables."""
    lowers = []  # x >= rhs - coeffs.y   (strictness recorded)
    uppers = []  # x <= rhs - coeffs.y
    rest = []
    for c, r, s in cons:
        a = c[k - 1]
        head = c[: k - 1]
        if a == 0:
            rest.append((head, r, s))
        else:
            scaled = (tuple(Fraction(x, a) for x in head), Fraction(r, a), s)
            (uppers if a > 0 else lowers).append(scaled)
    for cl, rl, sl in lowers:
        for cu, ru, su in uppers:
            # rl - cl.y (<|<=) ru - cu.y
            rest.append((tuple(u - l for u, l in zip(cu, cl)), ru - rl, sl or su))
    return rest


def _build_chain(cons: Sequence[Constraint], nvars: int) -> Optional[list[list[Constraint]]]:
    """systems[k] = exact projection onto the first k variables, or None if infeasible."""
    cur = _dedupe(cons)
    if cur is None:
        return None
    systems: list = [None] * (nvars + 1)
    systems[nvars] = cur
    for k in range(nvars, 0, -1):
        cur = _dedupe(_eliminate(cur, k))
        if cur is None:
            return None
        systems[k - 1] = cur
    return systems


def _interval(cons: Sequence[Constraint], prefix: Sequence[Fraction], k: int):
    """Bounds for variable k-1 given values for variables 0..k-2.

    Returns (lo, lo_strict, hi, hi_strict) with None for an absent bound,
    or None if a constraint not involving variable k-1 is violated.
    """
    lo = hi = None
    lo_s = hi_s = False
    for c, r, s in cons:
        a = c[k - 1]
        rest = r - sum(ci * pi for ci, pi in zip(c[: k - 1], prefix))
        if a == 0:
            if rest < 0 or (s and rest == 0):
                return None
        elif a > 0:
            bound = Fraction(rest, a)
            if hi is None or bound < hi:
                hi, hi_s = bound, s
            elif bound == hi:
                hi_s = hi_s or s
        else:
            bound = Fraction(rest, a)
            if lo is None or bound > lo:
                lo, lo_s = bound, s
            elif bound == lo:
                lo_s = lo_s or s
    return (lo, lo_s, hi, hi_s)


def _pick(lo, lo_s, hi, hi_s) -> Optional[Fraction]:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    if lo > hi:
        return None
    if lo == hi:
        return None if (lo_s or hi_s) else lo
    return (lo + hi) / 2


def _fm_point(cons: Sequence[Constraint], nvars: int) -> Optional[tuple]:
    systems = _build_chain(cons, nvars)
    if systems is None:
        return None
    point: list[Fraction] = []
    for k in range(1, nvars + 1):
        iv = _interval(systems[k], point, k)
        if iv is None:
            return None
        v = _pick(*iv)
        if v is None:
            return None
        point.append(v)
    return tuple(point)


def find_point(cons: Sequence[Constraint], nvars: int) -> Optional[tuple]:
    """A rational point satisfying every constraint, or None."""
    if nvars <= FM_MAX_VARS:
        return _fm_point(cons, nvars)
    return _margin_point(cons, nvars)


def integer_point_search(cons: Sequence[Constraint], nvars: int, bound: int):
    """Search for an integer solution with every |x_i| <= bound.

    Returns (point, truncated).  ``point`` is a tuple of ints or None.
    ``truncated`` is True when some enumeration range was clipped at the
    bound, so a miss does not certify integer-infeasibility; a miss with
    ``truncated`` False (including rational infeasibility) does.
    """
    systems = _build_chain(cons, nvars)
    if systems is None:
        return None, False
    truncated = False

    def int_range(iv):
        nonlocal truncated
        lo, lo_s, hi, hi_s = iv
        if lo is None:
            lo_i = -bound
            truncated = True
        else:
            lo_i = math.ceil(lo)
            if lo_s and lo_i == lo:
                lo_i += 1
            if lo_i < -bound:
                lo_i = -bound
                truncated = True
        if hi is None:
            hi_i = bound
            truncated = True
        else:
            hi_i = math.floor(hi)
            if hi_s and hi_i == hi:
                hi_i -= 1
            if hi_i > bound:
                hi_i = bound
                truncated = True
        return lo_i, hi_i

    def dfs(k: int, prefix: list[int]):
        if k > nvars:
            return tuple(prefix)
        iv = _interval(systems[k], prefix, k)
        if iv is None:
            return None
        lo_i, hi_i = int_range(iv)
        for z in range(lo_i, hi_i + 1):
            prefix.append(z)
            found = dfs(k + 1, prefix)
            prefix.pop()
            if found is not None:
                return found
        return None

    return dfs(1, []), truncated


# ---------------------------------------------------------------------------
# Exact two-phase simplex (Bland's rule) used as the feasibility fallback
# when the variable count makes Fourier-Motzkin blow up.
# ---------------------------------------------------------------------------


def _simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """max c.w  s.t.  A w <= b, w >= 0, exact arithmetic.

    Returns (status, w, value) with status in {"optimal", "unbounded",
    "infeasible"}.
    """
    m, n = len(A), len(c)
    # columns: n structural + m slacks + artificials (appended as needed)
    rows = []
    basis = []
    art_cols = []
    ncols = n + m
    for i in range(m):
        row = [Fraction(x) for x in A[i]] + [Fraction(0)] * m + [Fraction(b[i])]
        row[n + i] = Fraction(1)
        if row[-1] < 0:
            row = [-x for x in row]
        rows.append(row)
    for i in range(m):
        if rows[i][n + i] == 1:
            basis.append(n + i)
        else:  # slack became -1 after negation: add an artificial
            for r in rows:
                r.insert(-1, Fraction(0))
            rows[i][-2] = Fraction(1)
            basis.append(ncols)
            art_cols.append(ncols)
            ncols += 1

    def pivot(r, col):
        piv = rows[r][col]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        basis[r] = col

    def optimize(obj):
        # obj: cost vector over all columns (maximization); rhs entry ignored
        while True:
            # reduced costs: obj_j - sum over basic rows
            z = [Fraction(0)] * (ncols + 1)
            for i, bi in enumerate(basis):
                cb = obj[bi]
                if cb != 0:
                    z = [zi + cb * xi for zi, xi in zip(z, rows[i])]
            entering = None
            for j in range(ncols):
                if j not in basis and obj[j] - z[j] > 0:
                    entering = j  # Bland: smallest index
                    break
            if entering is None:
                return "optimal", z[-1]
            leaving = None
            best = None
            for i in range(m):
                a = rows[i][entering]
                if a > 0:
                    ratio = rows[i][-1] / a
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                        best, leaving = ratio, i
            if leaving is None:
                return "unbounded", None
            pivot(leaving, entering)

    if art_cols:
        phase1 = [Fraction(0)] * (ncols + 1)
        for j in art_cols:
            phase1[j] = Fraction(-1)
        status, val = optimize(phase1)
        if val != 0:
            return "infeasible", None, None
        # drive leftover artificials out of the basis
        for i in range(m):
            if basis[i] in art_cols:
                for j in range(ncols):
                    if j not in art_cols and rows[i][j] != 0:
                        pivot(i, j)
                        break
        art = set(art_cols)
    else:
        art = set()

    obj = [Fraction(0)] * (ncols + 1)
    for j in range(n):
        obj[j] = Fraction(c[j])
    for j in art:
        obj[j] = Fraction(-10 ** 12)  # keep artificials out
    status, val = optimize(obj)
    if status != "optimal":
        return status, None, None
    w = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            w[bi] = rows[i][-1]
    return "optimal", w, val


def _margin_point(cons: Sequence[Constraint], nvars: int) -> Optional[tuple]:
    """Strict-system feasibility by maximizing a margin eps in [0, 1].

    Free variables are split x = u - v with u, v >= 0; strict constraints
    get +eps on the left.  The system admits a point satisfying every
    (strict) constraint iff the optimum margin is positive.
    """
    A = []
    b = []
    for c, r, s in cons:
        c = [Fraction(x) for x in c]
        A.append(c + [-x for x in c] + [Fraction(1 if s else 0)])
        b.append(Fraction(r))
    A.append([Fraction(0)] * (2 * nvars) + [Fraction(1)])
    b.append(Fraction(1))
    obj = [Fraction(0)] * (2 * nvars) + [Fraction(1)]
    status, w, val = _simplex_max(A, b, obj)
    if status != "optimal" or val <= 0:
        return None
    return tuple(w[i] - w[nvars + i] for i in range(nvars))


# ---------------------------------------------------------------------------
# Exact rational linear algebra helpers.
# ---------------------------------------------------------------------------


def rref(rows: Sequence[Sequence[Fraction]]):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(a):
            break
        sel = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        piv = a[r][col]
        a[r] = [x / piv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a, pivots


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple]:
    """Basis of {t : rows . t = 0} via the standard free-variable construction."""
    a, pivots = rref(rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -a[r][f]
        basis.append(tuple(vec))
    return basis
