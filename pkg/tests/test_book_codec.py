import random

import pytest
from hypothesis import given, settings, strategies as st

from chordbook.book_codec import (
    Book,
    BookSum,
    MultiChordPage,
    Page,
    book_tensor,
    booksum_from_json,
    booksum_to_json,
    decode_page,
    encode_chord,
    expand_books,
    page_sign,
    skeleton_booksum,
    split_page,
)
from chordbook.diagrams import Coefficient
from chordbook.generators import random_booksum, random_page, unit_pages


def test_encode_off_diagonal():
    p = encode_chord((1, 2), (2, 3), 2, 4)
    assert p.entries == ((2, 7, 1),)
    assert p.to_dense()[6][1] == 1


def test_encode_same_cell_is_two():
    p = encode_chord((2, 3), (2, 3), 2, 4)
    assert p.entries == ((7, 7, 2),)
    assert decode_page(p) == ((2, 3), (2, 3))


def test_encode_out_of_range():
    with pytest.raises(IndexError):
        encode_chord((3, 1), (1, 1), 2, 4)


def test_page_rejects_duplicates():
    with pytest.raises(ValueError):
        Page(1, 3, ((1, 2, 1), (2, 1, 1)))


@pytest.mark.parametrize("q,N", [(1, 3), (2, 4), (3, 2)])
def test_unit_pages_round_trip(q, N):
    pages = list(unit_pages(q, N))
    dim = q * N
    assert len(pages) == dim * (dim + 1) // 2
    for p in pages:
        a, b = decode_page(p)
        assert encode_chord(a, b, q, N) == p


def test_multi_chord_page_refused():
    with pytest.raises(MultiChordPage):
        decode_page(Page(1, 4, ((1, 2, 2),)))
    with pytest.raises(MultiChordPage):
        decode_page(Page(1, 4, ((1, 2, 1), (3, 4, 1))))


def test_negative_page_sign():
    assert page_sign(encode_chord((1, 1), (1, 2), 1, 4, sign=-1)) == -1


def test_split_odd_diagonal():
    with pytest.raises(ValueError):
        split_page(Page(1, 2, ((1, 1, 3),)))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10_000))
def test_split_sums_back(seed):
    rng = random.Random(seed)
    p = random_page(rng, 2, 3, max_chords=4)
    parts = split_page(p)
    acc = {}
    for part in parts:
        ((r, c, v),) = part.entries
        acc[(r, c)] = acc.get((r, c), 0) + v
    assert Page.from_dict(2, 3, acc) == p


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_expand_preserves_tensor(seed):
    rng = random.Random(seed)
    s = random_booksum(rng, 2, 3, max_chords=3)
    e = expand_books(s)
    assert book_tensor(e) == book_tensor(s)
    assert all(len(p.entries) == 1 for _, b in e.terms for p in b.pages)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_json_round_trip(seed):
    s = random_booksum(random.Random(seed), 3, 2)
    assert booksum_from_json(booksum_to_json(s)) == s


def test_empty_sum_keeps_shape():
    s = BookSum(2, 5)
    assert booksum_from_json(booksum_to_json(s)) == s


def test_addition_cancels():
    b = Book(1, 2, (encode_chord((1, 1), (1, 2), 1, 2),))
    s = BookSum(1, 2, ((Coefficient(1), b),))
    neg = BookSum(1, 2, ((Coefficient(-1), b),))
    assert len(s + neg) == 0


def test_skeleton_unknot(unknot):
    s = skeleton_booksum(unknot)
    assert s.q == 1 and s.N == 4
    ((c, b),) = s.terms
    assert c == 1 and b.pages[0].entries == ((2, 3, 1),)
