import random
from fractions import Fraction

from orbicheck import linalg
from orbicheck.cocycle import (
    EpsilonSection,
    TwistData,
    eigenspace_dims,
    frame_shape,
    frame_string,
    is_positive_frame,
    matrix_order,
)
from orbicheck.exact import Cyclotomic
from orbicheck.lattice import Lattice


def perm_matrix(images):
    n = len(images)
    mat = [[0] * n for _ in range(n)]
    for i, j in enumerate(images):
        mat[i][j] = 1
    return mat


def a1_power(n):
    return Lattice.from_gram([[2 if i == j else 0 for j in range(n)] for i in range(n)])


A2 = Lattice.from_gram([[2, -1], [-1, 2]])


def test_frame_shape_permutations():
    # two fixed points and two 3-cycles
    t = perm_matrix([0, 1, 3, 4, 2, 6, 7, 5])
    assert frame_shape(t) == {1: 2, 3: 2}
    assert frame_string(frame_shape(t)) == "1^2.3^2"
    # mixed cycle type (0 1)(2 3 4)
    t = perm_matrix([1, 0, 3, 4, 2])
    assert frame_shape(t) == {2: 1, 3: 1}
    assert matrix_order(t) == 6
    # negation has a negative frame
    neg = [[-1, 0], [0, -1]]
    assert frame_shape(neg) == {1: -2, 2: 2}
    assert not is_positive_frame(frame_shape(neg))
    # sign-twisted transposition
    flip = [[0, -1], [-1, 0]]
    assert frame_shape(flip) == {2: 1}


def test_eigenspace_dims():
    t = perm_matrix([1, 0, 3, 4, 2])
    dims = eigenspace_dims(t, 6)
    assert dims == {0: 2, 1: 0, 2: 1, 3: 1, 4: 1, 5: 0}
    fixed_and_triples = perm_matrix([0, 1, 3, 4, 2, 6, 7, 5])
    assert eigenspace_dims(fixed_and_triples, 3) == {0: 4, 1: 2, 2: 2}


def test_epsilon_section_identities():
    gram = [[2, -1, 0], [-1, 2, 1], [0, 1, 4]]
    eps = EpsilonSection(gram)
    rng = random.Random(11)
    for _ in range(60):
        a = [rng.randint(-3, 3) for _ in range(3)]
        b = [rng.randint(-3, 3) for _ in range(3)]
        ga = linalg.dot(linalg.vec_mat(a, gram), a)
        gab = linalg.dot(linalg.vec_mat(a, gram), b)
        assert eps(a, a) == (ga // 2) % 2
        assert (eps(a, b) + eps(b, a)) % 2 == gab % 2
        c = [rng.randint(-3, 3) for _ in range(3)]
        ab = [x + y for x, y in zip(a, b)]
        assert eps(ab, c) == (eps(a, c) + eps(b, c)) % 2


def test_negation_phases():
    td = TwistData(a1_power(1), [[-1]], p=2)
    alpha = [1]
    sigma = td.sigma(alpha)
    assert sigma.to_rational() == Fraction(1, 4)
    mu = td.mu(alpha)
    assert mu.to_rational() == -1
    assert td.mu_closed_form(alpha).to_rational() == -1
    # conj(sigma) * mu == sign * sigma with sign = (-1)^{norm/2}
    assert sigma.conj() * mu == sigma * td.phi_sign(alpha)
    assert (sigma.conj() * mu).to_rational() == Fraction(-1, 4)


def test_rotation_phases():
    # order-4 rotation of two orthogonal norm-2 vectors
    td = TwistData(a1_power(2), [[0, -1], [1, 0]], p=4)
    alpha = [1, 0]
    assert td.sigma(alpha).to_rational() == Fraction(1, 4)
    assert td.mu(alpha).to_rational() == -1
    assert td.mu_closed_form(alpha).to_rational() == -1


def three_cycle_data():
    return TwistData(a1_power(3), perm_matrix([1, 2, 0]), p=3)


def test_adjoint_phase_closed_form_domain():
    td = three_cycle_data()
    # off the orthogonal sublattice the closed form loses a sign
    alpha = [1, 0, 0]
    assert td.mu(alpha).to_rational() == -1
    assert td.mu_closed_form(alpha).to_rational() == 1
    # on it the two routes agree
    rng = random.Random(5)
    nc = td.ncoords
    for _ in range(40):
        x = [rng.randint(-2, 2) for _ in nc]
        alpha = linalg.vec_mat(x, nc)
        assert td.mu(alpha) == td.mu_closed_form(alpha)


def test_conjugation_identity_everywhere():
    setups = [
        TwistData(a1_power(1), [[-1]], p=2),
        TwistData(A2, [[0, 1], [1, 0]], p=2),
        TwistData(A2, [[-1, 0], [0, -1]], p=2),
        three_cycle_data(),
        TwistData(a1_power(5), perm_matrix([1, 0, 3, 4, 2]), p=6),
        TwistData(a1_power(5), perm_matrix([1, 2, 3, 4, 0]), p=5),
        TwistData(a1_power(2), [[0, -1], [1, 0]], p=4),
    ]
    rng = random.Random(23)
    for td in setups:
        for _ in range(25):
            alpha = [rng.randint(-2, 2) for _ in range(td.rank)]
            sigma = td.sigma(alpha)
            lhs = sigma.conj() * td.mu(alpha)
            rhs = sigma * td.phi_sign(alpha)
            assert lhs == rhs


def test_commutator_values():
    td = three_cycle_data()
    assert td.s == 6
    # frozen values on single-block vectors
    assert td.c_tau([1, 0, 0], [0, 1, 0]) == 4
    assert td.c_tau([0, 1, 0], [1, 0, 0]) == 2
    # the group commutator realizes the alternating form only orthogonally
    # to the fixed subspace; frozen mismatch off it
    e1 = td.elem([1, 0, 0])
    e2 = td.elem([0, 1, 0])
    assert td.commutator_twisted(e1, e2) == 2
    rng = random.Random(7)
    for td in [
        three_cycle_data(),
        TwistData(A2, [[0, 1], [1, 0]], p=2),
        TwistData(a1_power(5), perm_matrix([1, 0, 3, 4, 2]), p=6),
    ]:
        nc = td.ncoords
        for _ in range(30):
            a = linalg.vec_mat([rng.randint(-2, 2) for _ in nc], nc)
            b = linalg.vec_mat([rng.randint(-2, 2) for _ in nc], nc)
            want = td.c_tau(a, b)
            assert td.commutator_twisted(td.elem(a), td.elem(b)) == want
            assert td.c_tau(a, a) == 0
            assert (td.c_tau(a, b) + td.c_tau(b, a)) % td.s == 0
            assert td.c_tau(td.tau(a), td.tau(b)) == want


def test_alternating_and_bilinear_everywhere():
    rng = random.Random(97)
    for td in [
        three_cycle_data(),
        TwistData(a1_power(5), perm_matrix([1, 0, 3, 4, 2]), p=6),
        TwistData(a1_power(2), [[0, -1], [1, 0]], p=4),
    ]:
        for _ in range(30):
            a = [rng.randint(-2, 2) for _ in range(td.rank)]
            b = [rng.randint(-2, 2) for _ in range(td.rank)]
            c = [rng.randint(-2, 2) for _ in range(td.rank)]
            assert td.c_tau(a, a) == 0
            ab = [x + y for x, y in zip(a, b)]
            assert td.c_tau(ab, c) == (td.c_tau(a, c) + td.c_tau(b, c)) % td.s


def test_radical_contains_coinvariant_image():
    for td in [
        three_cycle_data(),
        TwistData(A2, [[0, 1], [1, 0]], p=2),
        TwistData(a1_power(5), perm_matrix([1, 0, 3, 4, 2]), p=6),
    ]:
        nc = td.ncoords
        for m in td.mcoords:
            # image of (1 - tau) lands orthogonal to the fixed subspace
            assert linalg.solve_integer(nc, m) is not None
            for n in nc:
                assert td.c_tau(m, n) == 0
        # the radical index in the orthogonal sublattice is a perfect square
        rc = td.rcoords
        coords = [linalg.solve_integer(nc, r) for r in rc]
        assert all(c is not None for c in coords)
        index = abs(linalg.det(coords))
        root = 1
        while root * root < index:
            root += 1
        assert root * root == index


def test_radical_of_triple_cycle_is_everything():
    td = three_cycle_data()
    nc = td.ncoords
    rc = td.rcoords
    assert linalg.row_hnf(nc) == linalg.row_hnf(rc)


def test_lift_signs_swap():
    td = TwistData(A2, [[0, 1], [1, 0]], p=2)
    assert td.fixed_coords == [[1, 1]]
    assert td.lift_sign_exponent([1, 1]) == 0
    assert td.lift_sign_exponent([2, 3]) == td.lift_sign_exponent([0, 1])
    # the lifted swap squares to the sign character, doubling the order
    assert td.lift_order_doubles()
    # negation on a single norm-2 vector lifts without doubling
    assert not TwistData(a1_power(1), [[-1]], p=2).lift_order_doubles()
    # plain permutations lift with no signs at all
    td3 = three_cycle_data()
    assert all(t == 0 for t in td3._lift_signs)
    assert not td3.lift_order_doubles()


def test_lift_is_automorphism():
    rng = random.Random(31)
    for td in [
        TwistData(A2, [[0, 1], [1, 0]], p=2),
        three_cycle_data(),
        TwistData(a1_power(5), perm_matrix([1, 0, 3, 4, 2]), p=6),
        TwistData(a1_power(2), [[0, -1], [1, 0]], p=4),
    ]:
        for gamma in td.fixed_coords:
            assert td.tau_hat(td.elem(gamma)) == td.elem(gamma)
        for _ in range(25):
            x = td.elem([rng.randint(-2, 2) for _ in range(td.rank)], rng.randrange(td.s))
            y = td.elem([rng.randint(-2, 2) for _ in range(td.rank)], rng.randrange(td.s))
            assert td.tau_hat(td.mul_twisted(x, y)) == td.mul_twisted(
                td.tau_hat(x), td.tau_hat(y)
            )
            assert td.tau_hat(td.mul_plain(x, y)) == td.mul_plain(
                td.tau_hat(x), td.tau_hat(y)
            )
            inv = td.inv_twisted(x)
            assert td.mul_twisted(x, inv) == td.elem([0] * td.rank, 0)


def test_twist_elements_land_in_coinvariant_image():
    rng = random.Random(41)
    for td in [
        TwistData(A2, [[0, 1], [1, 0]], p=2),
        three_cycle_data(),
        TwistData(a1_power(5), perm_matrix([1, 0, 3, 4, 2]), p=6),
    ]:
        for _ in range(20):
            alpha = [rng.randint(-2, 2) for _ in range(td.rank)]
            vec, _ = td.k_element(alpha)
            assert linalg.solve_integer(td.mcoords, list(vec)) is not None
