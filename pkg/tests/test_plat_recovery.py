import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chordbook.generators import random_plat
from chordbook.link_model import build_link
from chordbook.plat_recovery import (
    Degree1Table,
    InconsistentParity,
    degree1_table,
    parity_matrix,
    plat_permutation,
    plat_strands,
)


def inversion_parity(perm):
    n = len(perm)
    return [[a != b and ((perm[a] > perm[b]) == (a < b)) for b in range(n)] for a in range(n)]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_every_permutation_recovered(n):
    for perm in itertools.permutations(range(1, n + 1)):
        assert plat_permutation(inversion_parity(perm)) == perm


def test_non_inversion_set_rejected():
    # 1~3 odd alone is not the inversion set of any permutation of three
    P = [[False, False, True], [False, False, False], [True, False, False]]
    with pytest.raises(InconsistentParity):
        plat_permutation(P)


def test_asymmetric_rejected():
    with pytest.raises(InconsistentParity):
        plat_permutation([[False, True], [False, False]])


def test_half_integer_required():
    with pytest.raises(ValueError):
        Degree1Table({(1, 2): (0.0, Fraction(1, 3))})


def test_table_json_round_trip():
    t = Degree1Table({(2, 1): (0.5, Fraction(3, 2)), (1, 3): (0.0, 1)})
    assert Degree1Table.from_json(t.to_json()) == t


def test_single_twist():
    link = build_link([("cup", 1), ("cup", 3), ("xg", 2, 1, "ccw"), ("cap", 1), ("cap", 1)])
    width, perm = plat_strands(link)
    assert width == 4 and perm == [1, 3, 2, 4]
    assert plat_permutation(parity_matrix(degree1_table(link), 4)) == (1, 3, 2, 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_random_plats(seed):
    link = random_plat(random.Random(seed))
    width, perm = plat_strands(link)
    assert list(plat_permutation(parity_matrix(degree1_table(link), width))) == perm


def test_not_a_plat(unknot):
    link = build_link([("cup", 1), ("cap", 1), ("cup", 1), ("cap", 1)])
    with pytest.raises(ValueError):
        plat_strands(link)
