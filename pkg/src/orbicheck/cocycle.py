"""Central-extension data for an even lattice twisted by a finite-order isometry.

For an isometry of order dividing p, phases live in a cyclic group of
order s, where s = p for even p and s = 2p for odd p.  Group elements
are modeled as pairs (vector, k) with k an exponent mod s; the plain
product uses a bilinear mod-2 section of the lattice form, the twisted
product adds an order-s correction built from the isometry.  Adjoint
phases, lift signs, and commutator values all come out of this data.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import linalg
from .exact import Cyclotomic, cyclotomic_poly


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _moebius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def matrix_order(mat: list[list[int]], cap: int = 256) -> int:
    """Multiplicative order of an integer matrix; raises past `cap`."""
    n = len(mat)
    ident = linalg.identity(n)
    power = mat
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = linalg.mat_mul(power, mat)
    raise ValueError(f"matrix order exceeds {cap}")


def _poly_div_exact(num: list[int], den: list[int]) -> list[int] | None:
    """num / den over Z with ascending coefficients, or None if inexact."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            return None
        q = c // den[-1]
        out[k] = q
        for j, dj in enumerate(den):
            num[k + j] -= q * dj
    return out if all(c == 0 for c in num) else None


def cycle_factor_multiplicities(tmat: list[list[int]]) -> dict[int, int]:
    """Multiplicity of the order-d cyclotomic factor in the characteristic
    polynomial, for each d dividing the matrix order.  Keys with
    multiplicity zero are dropped."""
    order = matrix_order(tmat)
    # charpoly is returned leading-first; work ascending.
    poly = list(reversed(linalg.charpoly(tmat)))
    v: dict[int, int] = {}
    for d in _divisors(order):
        phi = [int(c) for c in cyclotomic_poly(d)]
        mult = 0
        while True:
            quot = _poly_div_exact(poly, phi)
            if quot is None:
                break
            poly = quot
            mult += 1
        if mult:
            v[d] = mult
    assert poly == [1], "characteristic polynomial has a non-cyclotomic factor"
    return v


def frame_shape(tmat: list[list[int]]) -> dict[int, int]:
    """Exponents m_a of the cycle-product form prod_a (x^a - 1)^{m_a} of the
    characteristic polynomial.  Exponents may be negative; zero exponents
    are dropped.  The decomposition always exists and is unique."""
    order = matrix_order(tmat)
    v = cycle_factor_multiplicities(tmat)
    shape: dict[int, int] = {}
    for a in _divisors(order):
        m = sum(
            _moebius(b // a) * v.get(b, 0) for b in _divisors(order) if b % a == 0
        )
        if m:
            shape[a] = m
    assert sum(a * m for a, m in shape.items()) == len(tmat)
    return shape


def is_positive_frame(shape: dict[int, int]) -> bool:
    return all(m > 0 for m in shape.values())


def frame_string(shape: dict[int, int]) -> str:
    parts = []
    for a in sorted(shape):
        m = shape[a]
        parts.append(f"{a}" if m == 1 else f"{a}^{m}")
    return ".".join(parts)


def eigenspace_dims(tmat: list[list[int]], p: int) -> dict[int, int]:
    """Dimension of the exp(2*pi*i*k/p) eigenspace for k = 0..p-1."""
    order = matrix_order(tmat)
    assert p % order == 0, "p must be a multiple of the matrix order"
    v = cycle_factor_multiplicities(tmat)
    dims = {}
    for k in range(p):
        d = p // gcd(p, k) if k else 1
        dims[k] = v.get(d, 0)
    assert sum(dims.values()) == len(tmat)
    return dims


class EpsilonSection:
    """Bilinear mod-2 section matching the commutator (-1)^<a,b> and the
    square rule e^a * e^a = (-1)^{<a,a>/2}: on basis pairs it takes the
    Gram entry below the diagonal, half the Gram entry on the diagonal,
    and zero above."""

    def __init__(self, gram: list[list]):
        n = len(gram)
        self.mat = [[0] * n for _ in range(n)]
        for i in range(n):
            assert gram[i][i] % 2 == 0, "lattice must be even"
            self.mat[i][i] = (gram[i][i] // 2) % 2
            for j in range(i):
                self.mat[i][j] = gram[i][j] % 2
        self.gram = gram

    def __call__(self, a, b) -> int:
        total = 0
        for i, ai in enumerate(a):
            if ai % 2 == 0:
                continue
            row = self.mat[i]
            for j, bj in enumerate(b):
                total += ai * bj * row[j]
        return total % 2


class TwistData:
    """An even lattice together with an isometry of order dividing p.

    Vectors are integer (or rational, where stated) coordinate rows in
    the lattice basis; the isometry acts on coordinates on the right.
    Group elements are pairs (tuple_of_coords, exponent_mod_s).
    """

    def __init__(self, lattice, tmat: list[list[int]], p: int | None = None):
        self.lattice = lattice
        self.gram = lattice.gram
        self.rank = len(self.gram)
        self.tmat = tmat
        order = matrix_order(tmat)
        if p is None:
            p = order
        assert p % order == 0, "p must be a multiple of the isometry order"
        assert (
            linalg.mat_mul(linalg.mat_mul(tmat, self.gram), linalg.transpose(tmat))
            == self.gram
        ), "matrix does not preserve the form"
        self.p = p
        self.s = p if p % 2 == 0 else 2 * p
        self.powers = [linalg.identity(self.rank)]
        for _ in range(p - 1):
            self.powers.append(linalg.mat_mul(self.powers[-1], tmat))
        self.eps = EpsilonSection(self.gram)
        # polarization of the lift-sign function: f = eps(tau a, tau b) + eps(a, b)
        e = self.eps.mat
        tet = linalg.mat_mul(linalg.mat_mul(tmat, e), linalg.transpose(tmat))
        self._fmat = [
            [(tet[i][j] + e[i][j]) % 2 for j in range(self.rank)]
            for i in range(self.rank)
        ]
        self._lift_signs = self._solve_lift_signs()
        self._ncoords = None
        self._rcoords = None

    # -- basic geometry -------------------------------------------------

    def tau(self, coords, power: int = 1):
        return linalg.vec_mat(list(coords), self.powers[power % self.p])

    def pair(self, a, b):
        return linalg.dot(linalg.vec_mat(list(a), self.gram), list(b))

    def project_fixed(self, coords):
        """Orthogonal projection onto the fixed subspace, as a rational row."""
        total = [Fraction(0)] * self.rank
        for k in range(self.p):
            total = linalg.vec_add(total, self.tau(coords, k))
        return [Fraction(c, self.p) for c in total]

    @property
    def fixed_coords(self) -> list[list[int]]:
        """Basis of the fixed sublattice (saturated), as coordinate rows."""
        delta = [
            [self.tmat[i][j] - (1 if i == j else 0) for j in range(self.rank)]
            for i in range(self.rank)
        ]
        return linalg.kernel_integer(delta)

    @property
    def ncoords(self) -> list[list[int]]:
        """Basis of the sublattice orthogonal to the fixed subspace."""
        if self._ncoords is None:
            fixed = self.fixed_coords
            if not fixed:
                self._ncoords = linalg.identity(self.rank)
            else:
                pairing = linalg.mat_mul(self.gram, linalg.transpose(fixed))
                self._ncoords = linalg.kernel_integer(pairing)
        return self._ncoords

    @property
    def mcoords(self) -> list[list[int]]:
        """Basis of the image lattice of (1 - tau), not saturated."""
        delta = [
            [(1 if i == j else 0) - self.tmat[i][j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        return linalg.row_hnf(delta)

    @property
    def rcoords(self) -> list[list[int]]:
        """Basis of the radical of the commutator form on `ncoords`:
        vectors whose commutator value with everything orthogonal to the
        fixed subspace vanishes mod s."""
        if self._rcoords is None:
            nc = self.ncoords
            k = len(nc)
            if k == 0:
                self._rcoords = []
                return self._rcoords
            cmat = [[self.c_tau(a, b) for b in nc] for a in nc]
            block = cmat + [
                [self.s if i == j else 0 for j in range(k)] for i in range(k)
            ]
            sols = linalg.kernel_integer(block)
            xparts = [row[:k] for row in sols]
            coords = [linalg.vec_mat(x, nc) for x in xparts]
            self._rcoords = linalg.row_hnf(coords)
        return self._rcoords

    # -- cocycle values --------------------------------------------------

    def _weight(self, i: int) -> int:
        return self.s // 2 + (self.s * i) // self.p

    def c_tau(self, a, b) -> int:
        """Commutator exponent mod s; accepts rational rows whose pairings
        give an integral total."""
        total = Fraction(0)
        for i in range(self.p):
            total += self._weight(i) * Fraction(self.pair(self.tau(a, i), b))
        assert total.denominator == 1, "commutator value is not integral"
        return int(total) % self.s

    def eps0(self, a, b) -> int:
        """Exponent relating the plain and twisted products, mod s."""
        total = Fraction(0)
        for r in range(1, (self.p + 1) // 2):
            total += self._weight(r) * Fraction(self.pair(self.tau(a, self.p - r), b))
        assert total.denominator == 1
        return int(total) % self.s

    def eps_tau(self, a, b) -> int:
        """Cocycle of the twisted product, mod s."""
        return ((self.s // 2) * self.eps(a, b) + self.eps0(a, b)) % self.s

    # -- group arithmetic -------------------------------------------------

    def elem(self, coords, k: int = 0):
        return (tuple(coords), k % self.s)

    def mul_plain(self, x, y):
        a, j = x
        b, k = y
        c = tuple(ai + bi for ai, bi in zip(a, b))
        return (c, (j + k + (self.s // 2) * self.eps(a, b)) % self.s)

    def mul_twisted(self, x, y):
        a, j = x
        b, k = y
        c = tuple(ai + bi for ai, bi in zip(a, b))
        return (c, (j + k + self.eps_tau(a, b)) % self.s)

    def inv_twisted(self, x):
        a, j = x
        neg = tuple(-ai for ai in a)
        return (neg, (-j - self.eps_tau(a, neg)) % self.s)

    def commutator_twisted(self, x, y):
        z = self.mul_twisted(self.mul_twisted(x, y), self.mul_twisted(
            self.inv_twisted(x), self.inv_twisted(y)))
        assert all(c == 0 for c in z[0])
        return z[1]

    # -- lift of the isometry ----------------------------------------------

    def _solve_lift_signs(self) -> list[int]:
        fixed = self.fixed_coords
        if not fixed:
            return [0] * self.rank
        rows = [[c % 2 for c in gamma] for gamma in fixed]
        rhs = [self._quadratic_part(gamma) for gamma in fixed]
        sol = linalg.solve_mod2(rows, rhs)
        assert sol is not None, "no sign assignment fixes the invariant vectors"
        return sol

    def _quadratic_part(self, coords) -> int:
        f = self._fmat
        total = 0
        for i, ci in enumerate(coords):
            total += (ci * (ci - 1) // 2) * f[i][i]
            for j in range(i):
                total += ci * coords[j] * f[i][j]
        return total % 2

    def lift_sign_exponent(self, coords) -> int:
        """Mod-2 exponent of the sign the lifted isometry attaches to the
        group element over `coords`; zero on the fixed sublattice."""
        t = self._lift_signs
        linear = sum(ci * ti for ci, ti in zip(coords, t))
        return (linear + self._quadratic_part(coords)) % 2

    def tau_hat(self, x):
        a, k = x
        sign = (self.s // 2) * self.lift_sign_exponent(a)
        return (tuple(self.tau(a)), (k + sign) % self.s)

    def lift_order_doubles(self) -> bool:
        """Whether the lifted isometry has order 2p instead of p."""
        for i in range(self.rank):
            coords = [0] * self.rank
            coords[i] = 1
            total = 0
            for j in range(self.p):
                total += self.lift_sign_exponent(self.tau(coords, j))
            if total % 2:
                return True
        return False

    def k_element(self, coords):
        """The element a^{-1} tau_hat(a) of the twisted group, for the
        section element a over `coords`."""
        a = self.elem(coords)
        return self.mul_twisted(self.inv_twisted(a), self.tau_hat(a))

    # -- phases -----------------------------------------------------------

    def phi_sign(self, coords) -> int:
        norm = self.pair(coords, coords)
        assert norm % 2 == 0
        return -1 if (norm // 2) % 2 else 1

    def sigma(self, coords) -> Cyclotomic:
        """Normalization scalar of the twisted vertex operator attached to
        a lattice vector."""
        result = Cyclotomic.rational(1)
        for r in range(1, (self.p + 1) // 2):
            e = self.pair(self.tau(coords, r), coords)
            result = result * (
                (Cyclotomic.rational(1) - Cyclotomic.zeta(self.p, -r)) ** e
            )
        if self.p % 2 == 0:
            e = self.pair(self.tau(coords, self.p // 2), coords)
            result = result * Cyclotomic.rational(Fraction(2) ** e)
        return result

    def mu(self, coords) -> Cyclotomic:
        """Adjoint phase: the inverse of the scalar by which the product of
        the group elements over a vector and its negative acts."""
        e0 = self.eps0(coords, coords)
        value = Cyclotomic.root_of_unity(Fraction(-e0, self.s))
        return value * self.phi_sign(coords)

    def mu_closed_form(self, coords) -> Cyclotomic:
        """Closed form of the adjoint phase, valid on vectors orthogonal to
        the fixed subspace."""
        total = 0
        for r in range(1, (self.p + 1) // 2):
            total += r * self.pair(self.tau(coords, r), coords)
        value = Cyclotomic.root_of_unity(Fraction(-total, self.p))
        if self.p % 2 == 0:
            n = self.pair(self.tau(coords, self.p // 2), coords)
            assert n % 2 == 0, "closed form needs an even cross pairing"
            if (n // 2) % 2:
                value = -value
        return value
