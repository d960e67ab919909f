"""Exact linear algebra over ZZ and QQ.

Thin wrappers around sympy's DomainMatrix (gmpy2-backed, exact) exposing a
plain-data interface: matrices are list-of-list of int or Fraction, vectors
are lists.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (
    hermite_normal_form,
    smith_normal_decomp,
)

Num = int | Fraction
Matrix = list[list[Num]]
Vector = list[Num]


def _is_int_matrix(rows: Matrix) -> bool:
    return all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
               for row in rows for x in row)


def _to_zz(rows: Matrix, shape: tuple[int, int]) -> DomainMatrix:
    elems = [[ZZ(int(x)) for x in row] for row in rows]
    return DomainMatrix(elems, shape, ZZ)


def _to_qq(rows: Matrix, shape: tuple[int, int]) -> DomainMatrix:
    elems = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row]
             for row in rows]
    return DomainMatrix(elems, shape, QQ)


def _dm(rows: Matrix, ncols: int | None = None, field: bool = False) -> DomainMatrix:
    shape = (len(rows), ncols if ncols is not None else (len(rows[0]) if rows else 0))
    if not field and _is_int_matrix(rows):
        return _to_zz(rows, shape)
    return _to_qq(rows, shape)


def _from_dm(dm: DomainMatrix) -> Matrix:
    if dm.domain == ZZ:
        return [[int(x) for x in row] for row in dm.to_list()]
    if dm.domain == QQ:
        return [[Fraction(int(x.numerator), int(x.denominator)) for x in row]
                for row in dm.to_list()]
    dm = dm.convert_to(QQ)
    return _from_dm(dm)


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v: Vector, a: Matrix) -> Vector:
    return [sum(x * row[j] for x, row in zip(v, a)) for j in range(len(a[0]))] if a else []


def vec_add(u: Vector, v: Vector) -> Vector:
    return [x + y for x, y in zip(u, v)]


def vec_sub(u: Vector, v: Vector) -> Vector:
    return [x - y for x, y in zip(u, v)]


def vec_scale(c: Num, v: Vector) -> Vector:
    return [c * x for x in v]


def dot(u: Vector, v: Vector) -> Num:
    return sum(x * y for x, y in zip(u, v))


def det(a: Matrix) -> Num:
    if not a:
        return 1
    d = _dm(a).det()
    if isinstance(d, int) or d.denominator == 1:
        return int(d) if isinstance(d, int) else int(d.numerator)
    return Fraction(int(d.numerator), int(d.denominator))


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return _dm(a, field=True).rank()


def inverse(a: Matrix) -> Matrix:
    dm = _dm(a, field=True)
    return _from_dm(dm.inv())


def solve(a: Matrix, b: Vector) -> list[Fraction] | None:
    """One rational solution x of a·x = b, or None if inconsistent.

    `a` may be any shape; free variables are set to 0.
    """
    if not a:
        return [] if all(x == 0 for x in b) else None
    m, n = len(a), len(a[0])
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    rref, pivots = _dm(aug, ncols=n + 1, field=True).rref()
    r = _from_dm(rref)
    if n in pivots:
        return None
    x: list[Fraction] = [Fraction(0)] * n
    for i, j in enumerate(pivots):
        x[j] = Fraction(r[i][n])
    return x


def kernel_rational(a: Matrix) -> Matrix:
    """Rows spanning {x : x·a = 0} over QQ (left kernel of the row map x ↦ x·a)."""
    if not a:
        return []
    dmt = _dm(transpose(a), field=True)
    ns = dmt.nullspace()
    return _from_dm(ns)


def kernel_integer(a: Matrix) -> Matrix:
    """HNF basis of the saturated integer left kernel {x ∈ ZZ^m : x·a = 0}."""
    rat = kernel_rational(a)
    cleared = []
    for row in rat:
        denlcm = 1
        for x in row:
            f = Fraction(x)
            denlcm = denlcm * f.denominator // _gcd(denlcm, f.denominator)
        cleared.append([int(Fraction(x) * denlcm) for x in row])
    return row_hnf(cleared)


def _gcd(a: int, b: int) -> int:
    import math
    return math.gcd(a, b)


def row_hnf(a: Matrix) -> list[list[int]]:
    """Row-style Hermite basis of the lattice generated by the integer rows.

    Zero rows are dropped: the result has full row rank.
    """
    rows = [r for r in a if any(x != 0 for x in r)]
    if not rows:
        return []
    dm = _dm(rows, ncols=len(rows[0]))
    assert dm.domain == ZZ, "row_hnf needs integer entries"
    h = hermite_normal_form(dm.transpose()).transpose()
    out = [r for r in _from_dm(h) if any(x != 0 for x in r)]
    return out


def snf(a: Matrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms: returns (d, u, v) with d = u·a·v."""
    dm = _dm(a)
    assert dm.domain == ZZ, "snf needs integer entries"
    d, u, v = smith_normal_decomp(dm)
    return _from_dm(d), _from_dm(u), _from_dm(v)


def charpoly(a: Matrix) -> list[Num]:
    """Characteristic polynomial coefficients, leading coefficient first."""
    coeffs = _dm(a).charpoly()
    out = []
    for c in coeffs:
        if isinstance(c, int):
            out.append(c)
        elif c.denominator == 1:
            out.append(int(c.numerator))
        else:
            out.append(Fraction(int(c.numerator), int(c.denominator)))
    return out


def lll_reduce(a: Matrix) -> list[list[int]]:
    """LLL-reduced basis (delta = 3/4) of the lattice spanned by the rows."""
    dm = _dm(a)
    assert dm.domain == ZZ, "lll_reduce needs integer entries"
    return _from_dm(dm.lll(delta=QQ(3, 4)))


def solve_integer(a: Matrix, b: Vector) -> list[int] | None:
    """One integer solution x of x·a = b (rows of `a` generate; b a target row)."""
    if not a:
        return [] if all(x == 0 for x in b) else None
    d, u, v = snf(a)
    # x·a = b  ⟺  (x·u⁻¹)·(u a) = b; write y = x·u⁻¹ acting on d·v⁻¹ … use d = u a v:
    # a = u⁻¹ d v⁻¹, so x a = b ⟺ (x u⁻¹) d = b v.  Solve y d = b v in integers.
    bv = vec_mat(b, v)
    m, n = len(d), len(d[0])
    y = [0] * m
    for j in range(n):
        dj = d[j][j] if j < m else 0
        if dj == 0:
            if bv[j] != 0:
                return None
        else:
            q, r = divmod(bv[j], dj)
            if r != 0:
                return None
            y[j] = q
    if any(x != 0 for x in bv[min(m, n):]):
        return None
    return [int(x) for x in mat_vec(transpose(u), y)]


def solve_mod2(a: list[list[int]], b: list[int]) -> list[int] | None:
    """One solution x over GF(2) of a·x = b, or None. Plain Gaussian elimination."""
    m = len(a)
    n = len(a[0]) if a else 0
    rows = [[x & 1 for x in row] + [b[i] & 1] for i, row in enumerate(a)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(m):
            if i != r and rows[i][c]:
                rows[i] = [(x + y) & 1 for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n]:
            return None
    x = [0] * n
    for i, c in pivots:
        x[c] = rows[i][n]
    return x
