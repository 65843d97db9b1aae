"""Exact integer and rational linear algebra primitives.

Everything here is plain Python ints and Fractions: Smith normal form with
unimodular transforms, Bareiss determinants, rational rank and inversion,
Fourier-Motzkin projection with integer point enumeration, and a
breadth-first minimal-solutions search for linear Diophantine systems over
the naturals (Contejean-Devie branching rule with domination pruning).
No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm, ceil, floor
from typing import Iterator, Optional

from .errors import InputError, InternalError


def _as_int(value) -> int:
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"integer required, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise InputError(f"integer required, got {value!r}")


def _check_matrix(M) -> tuple[int, int]:
    nr = len(M)
    nc = len(M[0]) if nr else 0
    if any(len(row) != nc for row in M):
        raise InputError("ragged matrix")
    return nr, nc


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B) -> list[list]:
    nb = len(B)
    return [[sum(A[i][k] * B[k][j] for k in range(nb)) for j in range(len(B[0]))] for i in range(len(A))]


def matvec(A, v) -> list:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in A]


def transpose(M) -> list[list]:
    return [list(col) for col in zip(*M)]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, x, y with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def det(M) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    nr, nc = _check_matrix(M)
    if nr != nc:
        raise InputError("determinant of a non-square matrix")
    if nr == 0:
        return 1
    a = [[_as_int(x) for x in row] for row in M]
    sign = 1
    prev = 1
    for k in range(nr - 1):
        if a[k][k] == 0:
            for i in range(k + 1, nr):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, nr):
            for j in range(k + 1, nr):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def rational_rank(M) -> int:
    """Rank over Q by exact Gaussian elimination."""
    nr, nc = _check_matrix(M)
    a = [[Fraction(x) for x in row] for row in M]
    rank = 0
    row = 0
    for col in range(nc):
        piv = next((i for i in range(row, nr) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(nr):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


def invert_rational(M) -> list[list[Fraction]]:
    """Exact inverse of a square matrix over Q."""
    nr, nc = _check_matrix(M)
    if nr != nc:
        raise InputError("inverse of a non-square matrix")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(nr)]
         for i, row in enumerate(M)]
    for col in range(nr):
        piv = next((i for i in range(col, nr) if a[i][col]), None)
        if piv is None:
            raise InputError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(nr):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[nr:] for row in a]


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M, check: bool = False):
    """U, D, V with U*M*V = D diagonal, d1 | d2 | ..., U and V unimodular.

    Classic elimination: pull the absolutely smallest entry into the pivot,
    clear its row and column with Euclidean row/column combinations, and when
    some trailing entry is not divisible by the pivot fold its row into the
    pivot row and repeat (the pivot shrinks each time, so this stops).
    """
    nr, nc = _check_matrix(M)
    D = [[_as_int(x) for x in row] for row in M]
    U = identity_matrix(nr)
    V = identity_matrix(nc)

    def row_combine(i1, i2, a, b, c, d):
        # (R_i1, R_i2) <- (a R_i1 + b R_i2, c R_i1 + d R_i2), ad - bc = +-1
        for X in (D, U):
            r1, r2 = X[i1], X[i2]
            for j in range(len(r1)):
                x, y = r1[j], r2[j]
                r1[j] = a * x + b * y
                r2[j] = c * x + d * y

    def col_combine(j1, j2, a, b, c, d):
        for X in (D, V):
            for row in X:
                x, y = row[j1], row[j2]
                row[j1] = a * x + b * y
                row[j2] = c * x + d * y

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for X in (D, V):
            for row in X:
                row[i], row[j] = row[j], row[i]

    for t in range(min(nr, nc)):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            swap_rows(t, best[0])
        if best[1] != t:
            swap_cols(t, best[1])
        while True:
            for i in range(t + 1, nr):
                b = D[i][t]
                if not b:
                    continue
                a = D[t][t]
                if b % a == 0:
                    q = b // a
                    row_combine(t, i, 1, 0, -q, 1)
                else:
                    g, x, y = xgcd(a, b)
                    row_combine(t, i, x, y, -(b // g), a // g)
            if any(D[i][t] for i in range(t + 1, nr)):
                continue
            for j in range(t + 1, nc):
                b = D[t][j]
                if not b:
                    continue
                a = D[t][t]
                if b % a == 0:
                    q = b // a
                    col_combine(t, j, 1, 0, -q, 1)
                else:
                    g, x, y = xgcd(a, b)
                    col_combine(t, j, x, y, -(b // g), a // g)
            if any(D[i][t] for i in range(t + 1, nr)) or any(D[t][j] for j in range(t + 1, nc)):
                continue
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if D[i][j] % D[t][t] != 0), None)
            if bad is None:
                break
            row_combine(t, bad[0], 1, 1, 0, 1)  # R_t += R_bad, brings the entry in reach
        if D[t][t] < 0:
            for j in range(nc):
                D[t][j] = -D[t][j]
            for j in range(nr):
                U[t][j] = -U[t][j]
    if check:
        verify_snf(M, U, D, V)
    return U, D, V


def verify_snf(M, U, D, V) -> None:
    """Re-check U*M*V = D, the divisibility chain, and unimodularity."""
    nr, nc = _check_matrix(M)
    if matmul(matmul(U, M), V) != D:
        raise InternalError("smith normal form: U*M*V != D")
    diag = [D[i][i] for i in range(min(nr, nc))]
    for i in range(nr):
        for j in range(nc):
            if i != j and D[i][j] != 0:
                raise InternalError("smith normal form: D not diagonal")
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            raise InternalError("smith normal form: zero before nonzero on the diagonal")
        if a != 0 and b % a != 0:
            raise InternalError("smith normal form: divisibility chain broken")
    if any(d < 0 for d in diag):
        raise InternalError("smith normal form: negative diagonal entry")
    if abs(det(U)) != 1 or abs(det(V)) != 1:
        raise InternalError("smith normal form: transform not unimodular")


# ---------------------------------------------------------------------------
# Fourier-Motzkin projection and integer enumeration
#
# A row (coeffs, rhs) encodes sum_j coeffs[j] * z_j <= rhs with integer
# coefficients (primitive) and a Fraction right-hand side.


def _normalize_row(coeffs, rhs):
    dens = [Fraction(c).denominator for c in coeffs] + [Fraction(rhs).denominator]
    scale = 1
    for d in dens:
        scale = lcm(scale, d)
    ics = tuple(int(Fraction(c) * scale) for c in coeffs)
    irhs = Fraction(rhs) * scale
    g = 0
    for c in ics:
        g = gcd(g, abs(c))
    if g > 1:
        ics = tuple(c // g for c in ics)
        irhs = irhs / g
    return ics, irhs


def _normalize_rows(rows):
    seen = {}
    for coeffs, rhs in rows:
        key, val = _normalize_row(coeffs, rhs)
        if all(c == 0 for c in key):
            if val < 0:
                # keep one witness of infeasibility
                seen[(key, -1)] = (key, val)
            continue
        prev = seen.get(key)
        if prev is None or val < prev[1]:
            seen[key] = (key, val)
    return list(seen.values())


def fm_eliminate(rows, var: int):
    """Project the system onto the variables other than var (coefficient zeroed)."""
    keep, pos, neg = [], [], []
    for coeffs, rhs in rows:
        c = coeffs[var]
        if c == 0:
            keep.append((coeffs, rhs))
        elif c > 0:
            pos.append((coeffs, rhs))
        else:
            neg.append((coeffs, rhs))
    out = list(keep)
    for pc, pr in pos:
        for mc, mr in neg:
            a = pc[var]
            b = -mc[var]
            combo = tuple(b * x + a * y for x, y in zip(pc, mc))
            out.append((combo, b * pr + a * mr))
    return _normalize_rows(out)


def fm_systems(rows, nvars: int):
    """systems[k]: the projection constraining variables 0..k only."""
    systems = [None] * nvars
    systems[nvars - 1] = _normalize_rows(rows)
    for k in range(nvars - 1, 0, -1):
        systems[k - 1] = fm_eliminate(systems[k], k)
    return systems


def _bounds_at(system, k, prefix):
    """Exact rational interval for variable k given the assigned prefix."""
    lo = hi = None
    for coeffs, rhs in system:
        c = coeffs[k]
        if c == 0:
            continue
        val = rhs - sum(coeffs[i] * prefix[i] for i in range(k))
        bound = Fraction(val, c)
        if c > 0:
            if hi is None or bound < hi:
                hi = bound
        else:
            if lo is None or bound > lo:
                lo = bound
    return lo, hi


def fm_enumerate_integer(rows, nvars: int) -> Iterator[tuple[int, ...]]:
    """All integer points of the polytope {z : rows}.  Requires boundedness.

    Eliminates variables back to front, then walks integer values level by
    level inside the exact conditional intervals.  An unbounded interval
    means the region was not a polytope, which callers must rule out.
    """
    if nvars == 0:
        return
    systems = fm_systems(rows, nvars)
    for coeffs, rhs in systems[0]:
        if all(c == 0 for c in coeffs) and rhs < 0:
            return

    def walk(k, prefix):
        lo, hi = _bounds_at(systems[k], k, prefix)
        if lo is None or hi is None:
            raise InternalError("unbounded direction in an enumeration region")
        if lo > hi:
            return
        for v in range(ceil(lo), floor(hi) + 1):
            nxt = prefix + (v,)
            if k + 1 == nvars:
                yield nxt
            else:
                yield from walk(k + 1, nxt)

    yield from walk(0, ())


def nonzero_cone_direction(B) -> Optional[list[int]]:
    """A nonzero integer z with B z >= 0 componentwise, or None if only z = 0.

    Projects the cone {z : B z >= 0} onto each coordinate by exact
    elimination; the cone is {0} exactly when every projection is {0}.  A
    found direction is lifted back through the eliminated variables and
    scaled to integers.
    """
    nr, nc = _check_matrix(B)
    base = [(tuple(Fraction(-x) for x in row), Fraction(0)) for row in B]
    for j in range(nc):
        perm = [j] + [i for i in range(nc) if i != j]
        prows = [(tuple(coeffs[p] for p in perm), rhs) for coeffs, rhs in base]
        systems = fm_systems(prows, nc)
        has_pos = any(coeffs[0] > 0 for coeffs, _ in systems[0])
        has_neg = any(coeffs[0] < 0 for coeffs, _ in systems[0])
        if has_pos and has_neg:
            continue  # z_j forced to 0
        t = Fraction(-1) if has_pos else Fraction(1)
        vals = [t]
        feasible = True
        for k in range(1, nc):
            lo, hi = _bounds_at(systems[k], k, tuple(vals))
            if lo is not None and hi is not None and lo > hi:
                feasible = False
                break
            if lo is not None:
                vals.append(lo)
            elif hi is not None:
                vals.append(hi)
            else:
                vals.append(Fraction(0))
        if not feasible:
            continue
        z = [Fraction(0)] * nc
        for pos, var in enumerate(perm):
            z[var] = vals[pos]
        scale = 1
        for c in z:
            scale = lcm(scale, c.denominator)
        zi = [int(c * scale) for c in z]
        image = matvec(B, zi)
        if any(zi) and all(x >= 0 for x in image):
            return zi
        raise InternalError("cone direction reconstruction failed")
    return None


# ---------------------------------------------------------------------------
# Minimal solutions of linear Diophantine systems over the naturals


def _dominates_any(x, minimals):
    for m in minimals:
        if all(a >= b for a, b in zip(x, m)):
            return True
    return False


def _cd_search(columns, caps=None):
    """Componentwise-minimal nonzero solutions of sum_i x_i * columns[i] = 0, x in N^k.

    Breadth-first from the unit vectors; a node x grows in direction i only
    when <Ax, Ae_i> < 0, which preserves completeness; nodes dominating a
    known solution are pruned.  caps bounds individual coordinates (used for
    the homogenization variable), which only discards solutions above a cap.
    """
    k = len(columns)
    nrows = len(columns[0]) if k else 0
    zero_val = (0,) * nrows
    minimals = []
    frontier = {}
    for i in range(k):
        if caps is not None and caps.get(i, None) is not None and caps[i] < 1:
            continue
        unit = tuple(1 if j == i else 0 for j in range(k))
        frontier[unit] = tuple(columns[i])
    while frontier:
        sols = sorted(x for x, v in frontier.items() if v == zero_val)
        minimals.extend(sols)
        nxt = {}
        for x, v in frontier.items():
            if v == zero_val:
                continue
            if _dominates_any(x, minimals):
                continue
            for i in range(k):
                if caps is not None:
                    cap = caps.get(i, None)
                    if cap is not None and x[i] >= cap:
                        continue
                col = columns[i]
                if sum(a * b for a, b in zip(v, col)) >= 0:
                    continue
                child = x[:i] + (x[i] + 1,) + x[i + 1:]
                if child in nxt:
                    continue
                if _dominates_any(child, minimals):
                    continue
                nxt[child] = tuple(a + b for a, b in zip(v, col))
        frontier = nxt
    return sorted(minimals)


def minimal_natural_solutions(rows, nvars: int) -> list[tuple[int, ...]]:
    """Minimal solutions in N^nvars of the integer system coeffs . x = rhs.

    Homogeneous systems yield the minimal nonzero solutions.  Inhomogeneous
    systems are homogenized with one extra counter variable capped at 1;
    minimal solutions of the original system are exactly the minimal
    homogeneous solutions with counter value 1.
    """
    checked = []
    for coeffs, rhs in rows:
        checked.append((tuple(_as_int(c) for c in coeffs), _as_int(rhs)))
        if len(checked[-1][0]) != nvars:
            raise InputError("row width does not match the variable count")
    if all(rhs == 0 for _, rhs in checked):
        columns = [tuple(coeffs[i] for coeffs, _ in checked) for i in range(nvars)]
        return _cd_search(columns)
    columns = [tuple(coeffs[i] for coeffs, _ in checked) for i in range(nvars)]
    columns.append(tuple(-rhs for _, rhs in checked))
    sols = _cd_search(columns, caps={nvars: 1})
    return sorted(s[:-1] for s in sols if s[-1] == 1)
