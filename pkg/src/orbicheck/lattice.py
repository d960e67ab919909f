"""Integral and rational lattices with exact arithmetic.

A Lattice is a list of basis rows inside an ambient rational quadratic space
(ambient Gram matrix, identity by default).  All enumeration is exact
Fincke-Pohst over Fractions; no floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import linalg as la
from .linalg import Matrix, Num, Vector


def frac_floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def frac_round(q: Fraction) -> int:
    return frac_floor(q + Fraction(1, 2))


class Lattice:
    """A finite-rank lattice: basis rows in a rational ambient quadratic space."""

    def __init__(self, basis: Matrix, ambient_gram: Matrix | None = None):
        self.basis = [[Fraction(x) if not isinstance(x, int) else x for x in row]
                      for row in basis]
        self.rank = len(self.basis)
        self.dim = len(self.basis[0]) if self.basis else (
            len(ambient_gram) if ambient_gram else 0)
        if ambient_gram is None:
            ambient_gram = la.identity(self.dim)
        self.ambient_gram = ambient_gram
        self._gram: Matrix | None = None
        self._red: tuple[Matrix, Matrix] | None = None

    @staticmethod
    def from_gram(gram: Matrix) -> "Lattice":
        return Lattice(la.identity(len(gram)), gram)

    # -- basic invariants

    @property
    def gram(self) -> Matrix:
        if self._gram is None:
            bg = la.mat_mul(self.basis, self.ambient_gram)
            self._gram = la.mat_mul(bg, la.transpose(self.basis))
        return self._gram

    def det(self) -> Num:
        return la.det(self.gram)

    def is_integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for row in self.gram for x in row)

    def is_even(self) -> bool:
        g = self.gram
        return self.is_integral() and all(int(g[i][i]) % 2 == 0 for i in range(self.rank))

    def inner(self, u: Vector, v: Vector) -> Num:
        return la.dot(la.vec_mat(u, self.ambient_gram), v)

    def norm(self, v: Vector) -> Num:
        return self.inner(v, v)

    # -- coordinates and membership

    def coords(self, v: Vector) -> list[Fraction] | None:
        """Rational coordinates of an ambient vector in this basis, or None."""
        return la.solve(la.transpose(self.basis), v)

    def contains(self, v: Vector) -> bool:
        c = self.coords(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def from_coords(self, x: Vector) -> Vector:
        return la.vec_mat(x, self.basis)

    # -- derived lattices

    def dual(self) -> "Lattice":
        """The dual lattice inside the same ambient space."""
        gi = la.inverse(self.gram)
        return Lattice(la.mat_mul(gi, self.basis), self.ambient_gram)

    def rescaled(self, c: Num) -> "Lattice":
        """Same basis, inner product scaled by c."""
        g = [[c * x for x in row] for row in self.ambient_gram]
        return Lattice([list(row) for row in self.basis], g)

    def sublattice(self, coord_rows: Matrix) -> "Lattice":
        """Sublattice spanned by the given rows of coordinates in this basis."""
        return Lattice([self.from_coords(r) for r in coord_rows], self.ambient_gram)

    def index_of(self, sub: "Lattice") -> int:
        """Index [self : sub] for a finite-index sublattice."""
        coords = [self.coords(b) for b in sub.basis]
        assert all(c is not None for c in coords), "not a sublattice"
        assert all(x.denominator == 1 for c in coords for x in c), "not a sublattice"
        d = la.det([[int(x) for x in c] for c in coords])
        assert d != 0, "sublattice has smaller rank"
        return abs(int(d))

    def intersect(self, other: "Lattice") -> "Lattice":
        """Intersection with another lattice in the same ambient space."""
        den = 1
        for row in self.basis + other.basis:
            for x in row:
                den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
        b1 = [[int(x * den) for x in row] for row in self.basis]
        b2 = [[int(x * den) for x in row] for row in other.basis]
        # kernel of (a, b) -> a B1 - b B2; the a-part lands in the intersection
        stacked = b1 + [[-x for x in row] for row in b2]
        ker = la.kernel_integer(stacked)
        rows = [la.vec_mat(k[: self.rank], self.basis) for k in ker]
        basis = _rational_row_basis(rows)
        return Lattice(basis, self.ambient_gram)

    def orthogonal_complement(self, vectors: list[Vector]) -> "Lattice":
        """{x in self : <x, v> = 0 for all given ambient vectors v}, saturated."""
        pair = [[self.inner(b, v) for v in vectors] for b in self.basis]
        den = 1
        for row in pair:
            for x in row:
                den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
        pair_int = [[int(x * den) for x in row] for row in pair]
        ker = la.kernel_integer(pair_int)
        return self.sublattice(ker)

    def fixed_sublattice(self, tmat: list[list[int]]) -> "Lattice":
        """Fixed points of an isometry given in basis coordinates (x -> x T)."""
        n = self.rank
        m = [[tmat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        ker = la.kernel_integer(m)
        return self.sublattice(ker)

    def discriminant_group(self) -> list[tuple[int, Vector]]:
        """Cyclic decomposition of dual/self: [(order, generator ambient vector)]."""
        assert self.is_integral(), "discriminant group needs an integral lattice"
        g = [[int(x) for x in row] for row in self.gram]
        d, _u, v = la.snf(g)
        vinv = la.inverse(v)
        gi = la.inverse(self.gram)
        out = []
        for i in range(self.rank):
            di = d[i][i] if i < len(d) and i < len(d[0]) else 0
            assert di != 0
            if abs(di) == 1:
                continue
            y = [Fraction(int(x)) for x in vinv[i]]
            x = la.vec_mat(y, gi)
            out.append((abs(int(di)), self.from_coords(x)))
        return out

    # -- enumeration

    def _reduced(self) -> tuple[Matrix, Matrix]:
        """LLL-reduced Gram plus the transform W with W . basis the new rows."""
        if self._red is not None:
            return self._red
        if self.rank == 0:
            self._red = ([], [])
            return self._red
        den = 1
        for row in self.basis:
            for x in row:
                den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
        scaled = [[int(x * den) for x in row] for row in self.basis]
        from sympy import QQ as _QQ
        _red, t = la._dm(scaled).lll_transform(delta=_QQ(3, 4))
        w = la._from_dm(t)
        nb = la.mat_mul(w, self.basis)
        gram = self.gram_of(nb)
        self._red = (gram, w)
        return self._red

    def vectors_of_norm_up_to(self, max_norm: Num,
                              include_zero: bool = False) -> dict[Fraction, list[Vector]]:
        """All lattice vectors v with 0 < <v,v> <= max_norm, grouped by norm.

        Returns ambient vectors; one of each +/- pair is NOT folded (both appear).
        """
        gram, w = self._reduced()
        nb = la.mat_mul(w, self.basis)
        out: dict[Fraction, list[Vector]] = {}
        for x in _fincke_pohst(gram, Fraction(max_norm)):
            v = la.vec_mat(list(x), nb)
            n = Fraction(self.norm(v))
            if n == 0 and not include_zero:
                continue
            out.setdefault(n, []).append(v)
        return out

    def shifted_vectors_up_to(self, shift: Vector, max_norm: Num) -> dict[Fraction, list[Vector]]:
        """All v in (shift + self) with <v,v> <= max_norm, grouped by norm."""
        gram, w = self._reduced()
        nb = la.mat_mul(w, self.basis)
        # write shift = s_par + s_perp with s_par in the rational span
        bg = la.mat_mul(nb, self.ambient_gram)
        rhs = [self.inner(b, shift) for b in nb]
        sol = la.solve(self.gram_of(nb), rhs)
        assert sol is not None
        s_par = la.vec_mat(sol, nb)
        s_perp = la.vec_sub(shift, s_par)
        perp_norm = Fraction(self.norm(s_perp))
        budget = Fraction(max_norm) - perp_norm
        out: dict[Fraction, list[Vector]] = {}
        if budget < 0:
            return out
        gram_red = self.gram_of(nb)
        for x in _fincke_pohst(gram_red, budget, shift=[Fraction(c) for c in sol]):
            v = la.vec_add(la.vec_mat(list(x), nb), s_par)
            v = la.vec_add(v, s_perp)
            n = Fraction(self.norm(v))
            out.setdefault(n, []).append(v)
        return out

    def gram_of(self, rows: Matrix) -> Matrix:
        bg = la.mat_mul(rows, self.ambient_gram)
        return la.mat_mul(bg, la.transpose(rows))

    def theta_prefix(self, max_norm: Num) -> dict[Fraction, int]:
        """Vector counts by norm up to max_norm (zero vector excluded)."""
        return {n: len(vs) for n, vs in
                sorted(self.vectors_of_norm_up_to(max_norm).items())}

    def root_sublattice(self) -> "Lattice":
        """Sublattice generated by the norm-2 vectors."""
        roots = self.vectors_of_norm_up_to(2).get(Fraction(2), [])
        if not roots:
            return Lattice([], self.ambient_gram)
        return Lattice(_rational_row_basis(roots), self.ambient_gram)


def _rational_row_basis(rows: Matrix) -> Matrix:
    """Lattice basis from rational generating rows (clear denominators, HNF, undo)."""
    if not rows:
        return []
    den = 1
    for row in rows:
        for x in row:
            f = Fraction(x)
            den = den * f.denominator // math.gcd(den, f.denominator)
    ints = [[int(Fraction(x) * den) for x in row] for row in rows]
    h = la.row_hnf(ints)
    return [[Fraction(x, den) for x in row] for row in h]


# ---------------------------------------------------------------------------
# exact Fincke-Pohst


def _fp_decompose(gram: Matrix) -> list[list[Fraction]]:
    """Cholesky-style decomposition: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    r = len(gram)
    q = [[Fraction(gram[i][j]) for j in range(r)] for i in range(r)]
    for i in range(r):
        assert q[i][i] > 0, "form must be positive definite"
        for j in range(i + 1, r):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, r):
            for l in range(k, r):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _fincke_pohst(gram: Matrix, bound: Fraction, shift: list[Fraction] | None = None):
    """Yield integer vectors x with Q(x + shift) <= bound (Q given by gram).

    Unshifted enumeration yields each +/- pair fully (no folding) and includes 0.
    """
    r = len(gram)
    if r == 0:
        if bound >= 0:
            yield ()
        return
    if bound < 0:
        return
    q = _fp_decompose(gram)
    s = shift if shift is not None else [Fraction(0)] * r
    x = [0] * r

    def rec(i: int, remaining: Fraction, inner: list[Fraction]):
        # inner[i] = sum_{j>i} q_ij (x_j + s_j)
        c = s[i] + inner[i]
        qi = q[i][i]
        # integers t with qi (t + c)^2 <= remaining, scanned outward from center
        center = frac_round(-c)

        def admissible(t: int) -> Fraction | None:
            val = qi * (t + c) ** 2
            return remaining - val if val <= remaining else None

        seq = []
        rem0 = admissible(center)
        if rem0 is not None:
            seq.append((center, rem0))
            k = 1
            while True:
                t = center + k
                rem = admissible(t)
                if rem is None:
                    break
                seq.append((t, rem))
                k += 1
            k = 1
            while True:
                t = center - k
                rem = admissible(t)
                if rem is None:
                    break
                seq.append((t, rem))
                k += 1
        for t, rem in seq:
            x[i] = t
            if i == 0:
                yield tuple(x)
            else:
                new_inner = list(inner)
                for j in range(i):
                    new_inner[j] = inner[j] + q[j][i] * (t + s[i])
                yield from rec(i - 1, rem, new_inner)

    yield from rec(r - 1, bound, [Fraction(0)] * r)


# ---------------------------------------------------------------------------
# isometry testing


def is_isometric(l1: Lattice, l2: Lattice, max_norm: Num | None = None
                 ) -> tuple[bool, Matrix | None]:
    """Decide isometry of two positive definite lattices; return a witness.

    The witness W maps basis coordinates of l1 to basis coordinates of l2:
    W . gram(l2) . W^T = gram(l1).  Intended for rank <= 12.
    """
    if l1.rank != l2.rank:
        return False, None
    if l1.det() != l2.det():
        return False, None
    if l1.rank == 0:
        return True, []
    g1, w1 = l1._reduced()
    b2gram, w2 = l2._reduced()
    need = max(g1[i][i] for i in range(l1.rank))
    if max_norm is not None:
        need = max(need, Fraction(max_norm))
    t1 = _theta_of_gram(g1, need)
    t2 = _theta_of_gram(b2gram, need)
    if t1 != t2:
        return False, None
    # candidate images by norm, in l2 (reduced) coordinates
    by_norm: dict[Fraction, list[tuple[int, ...]]] = {}
    for x in _fincke_pohst(b2gram, Fraction(need)):
        n = _qform(b2gram, x)
        if n != 0:
            by_norm.setdefault(n, []).append(x)
    r = l1.rank
    # match basis vectors in order of fewest candidates first
    order = sorted(range(r), key=lambda i: len(by_norm.get(Fraction(g1[i][i]), [])))
    chosen: list[tuple[int, ...]] = []

    def pair2(x: tuple[int, ...], y: tuple[int, ...]) -> Fraction:
        return sum(Fraction(x[i]) * sum(b2gram[i][j] * y[j] for j in range(r))
                   for i in range(r))

    def extend(k: int) -> bool:
        if k == r:
            return True
        i = order[k]
        for cand in by_norm.get(Fraction(g1[i][i]), []):
            ok = True
            for kk in range(k):
                if pair2(cand, chosen[kk]) != g1[i][order[kk]]:
                    ok = False
                    break
            if ok:
                chosen.append(cand)
                if extend(k + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        return False, None
    w = [list(chosen[order.index(i)]) for i in range(r)]
    # w maps reduced-l1 coords to reduced-l2 coords; compose the reductions away
    w1m = [[int(x) for x in row] for row in w1]
    w1_inv = la.inverse(w1m)
    full = la.mat_mul(la.mat_mul(w1_inv, w), [[int(x) for x in row] for row in w2])
    full_int = [[int(x) for x in row] for row in full]
    check = la.mat_mul(la.mat_mul(full_int, l2.gram), la.transpose(full_int))
    assert check == l1.gram
    return True, full_int


def _qform(gram: Matrix, x: tuple[int, ...]) -> Fraction:
    r = len(gram)
    return Fraction(sum(x[i] * gram[i][j] * x[j] for i in range(r) for j in range(r)))


def _theta_of_gram(gram: Matrix, max_norm: Fraction) -> dict[Fraction, int]:
    out: dict[Fraction, int] = {}
    for x in _fincke_pohst(gram, Fraction(max_norm)):
        n = _qform(gram, x)
        if n != 0:
            out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))
