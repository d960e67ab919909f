from fractions import Fraction

import pytest

from orbicheck.niemeier import (
    COMPONENTS,
    binary_golay,
    build_niemeier,
    hexacode,
    octacode,
    root_count,
    ternary_golay,
    tetracode,
    validate_niemeier,
)


def test_binary_golay_weights():
    basis = binary_golay()
    assert len(basis) == 12
    # self-dual
    assert all(sum(a * b for a, b in zip(r1, r2)) % 2 == 0
               for r1 in basis for r2 in basis)


def test_ternary_golay():
    basis = ternary_golay()
    assert len(basis) == 6
    assert all(len(r) == 12 for r in basis)


def test_octacode_typeii():
    basis = octacode()
    assert len(basis) == 4
    assert all(len(r) == 8 for r in basis)


def test_hexacode_size():
    gens = hexacode()
    # F2-span of the 6 generators has 4^3 = 64 words
    seen = {tuple([0] * 6)}
    frontier = [tuple([0] * 6)]
    while frontier:
        w = frontier.pop()
        for g in gens:
            nw = tuple(a ^ b for a, b in zip(w, g))
            if nw not in seen:
                seen.add(nw)
                frontier.append(nw)
    assert len(seen) == 64
    # minimum weight 4
    assert min(sum(1 for x in w if x) for w in seen if any(w)) == 4


@pytest.mark.parametrize("name", sorted(COMPONENTS))
def test_niemeier_valid(name):
    nie = build_niemeier(name)
    info = validate_niemeier(nie)
    assert info["det"] == 1
    assert info["roots"] == root_count(name)
