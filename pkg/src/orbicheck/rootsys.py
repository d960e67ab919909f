"""Finite root systems: standard Gram matrices, diagram automorphisms,
identification of a root system from its vectors, and affine-algebra
descriptors ("A_{1,3}^6 U(1)^6") with exact level computation."""

from __future__ import annotations

import re
from fractions import Fraction

from . import linalg as la
from .linalg import Matrix, Num, Vector

# ---------------------------------------------------------------------------
# simple root data (simply laced pieces used for lattice constructions)


def simple_gram(letter: str, n: int) -> Matrix:
    """Gram matrix of the simple roots (norm-2 normalization)."""
    if letter == "A":
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2
            if i + 1 < n:
                g[i][i + 1] = g[i + 1][i] = -1
        return g
    if letter == "D":
        assert n >= 3
        g = simple_gram("A", n)
        g[n - 1][n - 2] = g[n - 2][n - 1] = 0
        g[n - 1][n - 3] = g[n - 3][n - 1] = -1
        return g
    if letter == "E":
        assert n in (6, 7, 8)
        # chain 1..(n-1), node n attached to node 3
        g = simple_gram("A", n)
        g[n - 1][n - 2] = g[n - 2][n - 1] = 0
        g[n - 1][2] = g[2][n - 1] = -1
        return g
    raise ValueError(f"unknown type {letter}{n}")


def diagram_automorphism(letter: str, n: int, kind: str = "delta") -> list[list[int]]:
    """Permutation matrix (root-basis coordinates, x -> x P) of a diagram symmetry.

    kind="delta": the order-2 symmetry (identity for A1 and E7/E8/D4-excluded
    cases where none exists); kind="triality": the order-3 symmetry of D4.
    """
    perm = list(range(n))
    if kind == "delta":
        if letter == "A":
            perm = [n - 1 - i for i in range(n)]
        elif letter == "D":
            if n == 4:
                # one of the three involutions: swap the last two fork ends
                perm = [0, 1, 3, 2]
            else:
                perm = list(range(n - 2)) + [n - 1, n - 2]
        elif letter == "E" and n == 6:
            # chain 1-2-3-4-5 with 6 on node 3: reverse the chain
            perm = [4, 3, 2, 1, 0, 5]
        else:
            raise ValueError(f"no delta for {letter}{n}")
    elif kind == "triality":
        assert (letter, n) == ("D", 4)
        # fork ends of D4 in this labeling: nodes 1, 3, 4 (0-indexed 0, 2, 3)
        perm = [2, 1, 3, 0]
    else:
        raise ValueError(f"unknown kind {kind}")
    p = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        p[i][j] = 1
    # a diagram symmetry preserves the Gram matrix
    g = simple_gram(letter, n)
    assert la.mat_mul(la.mat_mul(p, g), la.transpose(p)) == g
    return p


ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def lie_dimension(letter: str, n: int) -> int:
    """Dimension of the simple Lie algebra: number of roots plus rank."""
    return ROOT_COUNTS[letter](n) + n


# ---------------------------------------------------------------------------
# identification of a root system from explicit vectors


class RootComponent:
    """One irreducible piece: type, rank, level (= 2 / norm of highest root)."""

    def __init__(self, letter: str, rank: int, level: int, roots: list[Vector],
                 simple: list[Vector]):
        self.letter = letter
        self.rank = rank
        self.level = level
        self.roots = roots
        self.simple = simple

    def key(self) -> tuple[str, int, int]:
        return canonical_type(self.letter, self.rank) + (self.level,)

    def __repr__(self):
        return f"{self.letter}_{{{self.rank},{self.level}}}"


def canonical_type(letter: str, rank: int) -> tuple[str, int]:
    """Resolve the small-rank coincidences: C2=B2, D3=A3, B1=C1=A1, D2 is not
    irreducible and never occurs here."""
    if rank == 1:
        return ("A", 1)
    if rank == 2 and letter == "C":
        return ("B", 2)
    if rank == 3 and letter == "D":
        return ("A", 3)
    return (letter, rank)


def identify_root_system(roots: list[Vector], gram: Matrix) -> list[RootComponent]:
    """Classify a finite crystallographic root system given as ambient vectors.

    `roots` must contain every root exactly once (both signs present);
    `gram` is the ambient inner product.  Levels are 2/<theta,theta> per
    component and must come out as positive integers.
    """
    if not roots:
        return []
    vecs = [tuple(Fraction(x) for x in v) for v in roots]
    index = {v: i for i, v in enumerate(vecs)}
    assert len(index) == len(vecs), "duplicate roots"
    for v in vecs:
        assert tuple(-x for x in v) in index, "roots must come in +/- pairs"

    ug = [la.vec_mat(list(v), gram) for v in vecs]

    def ip_idx(i, j):
        return la.dot(ug[i], list(vecs[j]))

    # connected components of the nonzero-pairing graph
    n = len(vecs)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if ip_idx(i, j) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    def ip(u, v):
        return la.dot(la.vec_mat(list(u), gram), list(v))

    out = []
    for idxs in groups.values():
        out.append(_identify_irreducible([vecs[i] for i in idxs], gram, ip))
    out.sort(key=lambda c: (-lie_dimension(c.letter, c.rank), c.letter,
                            -c.rank, c.level))
    return out


def _generic_positive(comp: list[tuple]) -> list[tuple]:
    """Split component into positive/negative halves by a generic functional."""
    dim = len(comp[0])
    t = 1
    while True:
        weights = [Fraction(t) ** k for k in range(dim)]
        vals = {v: la.dot(list(v), weights) for v in comp}
        if all(x != 0 for x in vals.values()):
            return [v for v in comp if vals[v] > 0]
        t += 1


def _identify_irreducible(comp: list[tuple], gram: Matrix, ip) -> RootComponent:
    pos = _generic_positive(comp)
    pos_set = set(pos)
    simple = []
    for a in pos:
        if not any(tuple(x - y for x, y in zip(a, b)) in pos_set for b in pos
                   if b != a):
            simple.append(a)
    rank = len(simple)
    assert rank > 0
    # Cartan integers a_ij = 2 <s_i, s_j> / <s_j, s_j>
    norms = [ip(s, s) for s in simple]
    cartan = [[2 * ip(si, sj) / norms[j] for j, sj in enumerate(simple)]
              for i, si in enumerate(simple)]
    for i in range(rank):
        for j in range(rank):
            cij = cartan[i][j]
            assert Fraction(cij).denominator == 1
            cartan[i][j] = int(cij)
            if i == j:
                assert cartan[i][j] == 2
            else:
                assert cartan[i][j] in (0, -1, -2, -3)
    letter = _classify_cartan(cartan, norms)
    # highest root: the positive root of maximal height
    coords = {}
    smat = la.transpose([list(s) for s in simple])
    for v in pos:
        c = la.solve(smat, list(v))
        assert c is not None
        coords[v] = c
    theta = max(pos, key=lambda v: sum(coords[v]))
    level_f = Fraction(2) / Fraction(ip(theta, theta))
    assert level_f.denominator == 1 and level_f > 0, \
        f"level {level_f} is not a positive integer"
    allroots = [list(v) for v in comp]
    assert len(allroots) == 2 * len(pos)
    assert len(allroots) == ROOT_COUNTS[letter](rank), \
        f"{letter}{rank}: {len(allroots)} roots"
    return RootComponent(letter, rank, int(level_f), allroots,
                         [list(s) for s in simple])


def _classify_cartan(cartan: list[list[int]], norms: list) -> str:
    """Name the Dynkin diagram of an irreducible Cartan matrix."""
    rank = len(cartan)
    if rank == 1:
        return "A"
    # edge multiplicities
    mult = [[cartan[i][j] * cartan[j][i] for j in range(rank)] for i in range(rank)]
    deg = [sum(1 for j in range(rank) if j != i and mult[i][j] > 0)
           for i in range(rank)]
    maxmult = max(mult[i][j] for i in range(rank) for j in range(rank) if i != j)
    if maxmult == 3:
        assert rank == 2
        return "G"
    if maxmult == 2:
        # B, C, or F4: locate the double edge
        pairs = [(i, j) for i in range(rank) for j in range(rank)
                 if i < j and mult[i][j] == 2]
        assert len(pairs) == 1
        i, j = pairs[0]
        if rank == 2:
            return "B"  # canonical_type folds C2 into B2
        if deg[i] == 2 and deg[j] == 2:
            assert rank == 4
            return "F"
        # chain with the double edge at one end; short end vector decides B vs C
        end = i if deg[i] == 1 else j
        other = j if end == i else i
        # B_n: the end node across the double edge is the short root
        return "B" if norms[end] < norms[other] else "C"
    # simply laced
    if max(deg) <= 2 and sum(1 for d in deg if d == 1) <= 2:
        return "A"
    branch = [i for i in range(rank) if deg[i] == 3]
    assert len(branch) == 1, "not an ADE diagram"
    b = branch[0]
    # arm lengths from the branch node
    arms = []
    for j in range(rank):
        if j != b and mult[b][j] > 0:
            length = 1
            prev, cur = b, j
            while True:
                nxt = [k for k in range(rank)
                       if k not in (prev, cur) and mult[cur][k] > 0]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return "D"
    assert arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4)
    return "E"


# ---------------------------------------------------------------------------
# descriptors


_TERM = re.compile(
    r"([A-G])_\{?(\d+),(\d+)\}?(?:\^\{?(\d+)\}?)?|U\(1\)(?:\^\{?(\d+)\}?)?")


def parse_descriptor(desc: str) -> tuple[list[tuple[str, int, int, int]], int]:
    """Parse "A_{5,3} D_{4,3} A_{1,1}^3 U(1)^2" into ([(letter, rank, level,
    multiplicity)], u1_count).  Whitespace between factors is optional."""
    terms: list[tuple[str, int, int, int]] = []
    u1 = 0
    pos = 0
    for m in _TERM.finditer(desc):
        assert desc[pos:m.start()].strip() == "", f"unparsed: {desc[pos:m.start()]!r}"
        pos = m.end()
        if m.group(1):
            letter, rank, level = m.group(1), int(m.group(2)), int(m.group(3))
            mult = int(m.group(4)) if m.group(4) else 1
            terms.append((letter, rank, level, mult))
        else:
            u1 += int(m.group(5)) if m.group(5) else 1
    assert desc[pos:].strip() == "", f"unparsed tail: {desc[pos:]!r}"
    return terms, u1


def descriptor_dimension(desc: str) -> int:
    """Total Lie algebra dimension of a descriptor (U(1) counts 1 each)."""
    terms, u1 = parse_descriptor(desc)
    return sum(lie_dimension(let, rk) * mult for let, rk, _lv, mult in terms) + u1


def descriptor_key(desc: str) -> tuple[tuple[tuple[str, int, int], int], ...]:
    """Canonical comparison key: sorted multiset of (type, rank, level) plus U(1)s."""
    terms, u1 = parse_descriptor(desc)
    counts: dict[tuple[str, int, int], int] = {}
    for letter, rank, level, mult in terms:
        key = canonical_type(letter, rank) + (level,)
        counts[key] = counts.get(key, 0) + mult
    items = sorted(counts.items())
    if u1:
        items.append((("U", 1, 0), u1))
    return tuple(items)


def components_key(comps: list[RootComponent], u1: int = 0
                   ) -> tuple[tuple[tuple[str, int, int], int], ...]:
    """The descriptor_key of an identified component list plus U(1)^u1."""
    counts: dict[tuple[str, int, int], int] = {}
    for c in comps:
        counts[c.key()] = counts.get(c.key(), 0) + 1
    items = sorted(counts.items())
    if u1:
        items.append((("U", 1, 0), u1))
    return tuple(items)
