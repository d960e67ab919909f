from fractions import Fraction

from orbicheck import linalg as la


def test_det_inverse_solve():
    a = [[2, 1], [1, 2]]
    assert la.det(a) == 3
    inv = la.inverse(a)
    assert inv == [[Fraction(2, 3), Fraction(-1, 3)], [Fraction(-1, 3), Fraction(2, 3)]]
    assert la.mat_mul(a, inv) == [[1, 0], [0, 1]]
    x = la.solve(a, [1, 0])
    assert x == [Fraction(2, 3), Fraction(-1, 3)]
    assert la.solve([[1, 1], [1, 1]], [1, 2]) is None
    # underdetermined: any solution is fine, check residual
    x = la.solve([[1, 1, 1], [0, 1, 1]], [3, 1])
    assert x is not None and la.mat_vec([[1, 1, 1], [0, 1, 1]], x) == [3, 1]


def test_row_hnf_drops_dependents():
    rows = [[2, 4, 4], [-6, 6, 12], [-4, 10, 16]]
    h = la.row_hnf(rows)
    assert len(h) == 2
    # every original row must be an integer combination of the basis
    for r in rows:
        assert la.solve_integer(h, r) is not None


def test_snf_transforms():
    a = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    d, u, v = la.snf(a)
    assert la.mat_mul(la.mat_mul(u, a), v) == d
    assert [d[i][i] for i in range(3)] == [1, 10, 30]
    assert abs(la.det(u)) == 1 and abs(la.det(v)) == 1


def test_kernel_integer_saturated():
    a = [[2, 0], [0, 2], [1, 1]]  # left kernel of x . a = 0
    k = la.kernel_integer(a)
    assert len(k) == 1
    # saturated: (1,1,-2), not (2,2,-4)
    assert k[0] in ([1, 1, -2], [-1, -1, 2])


def test_charpoly_permutation():
    # 3-cycle permutation matrix: x^3 - 1
    a = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert la.charpoly(a) == [1, 0, 0, -1]


def test_lll_reduces_norms():
    b = [[1, 0, 0], [401, 1, 0], [-199, 0, 1]]
    red = la.lll_reduce(b)
    assert abs(la.det(red)) == abs(la.det(b)) == 1
    assert all(sum(x * x for x in row) <= 6 for row in red)


def test_solve_integer():
    a = [[2, 0], [3, 3]]
    assert la.solve_integer(a, [7, 3]) == [2, 1]
    assert la.solve_integer(a, [1, 0]) is None


def test_solve_mod2():
    a = [[1, 1, 0], [0, 1, 1]]
    x = la.solve_mod2(a, [1, 0])
    assert x is not None
    assert [(sum(r * y for r, y in zip(row, x))) % 2 for row in a] == [1, 0]
    assert la.solve_mod2([[1, 1], [1, 1]], [0, 1]) is None
