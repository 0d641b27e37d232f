import random

import pytest
from hypothesis import given, settings, strategies as st

from chordbook.book_codec import Book, BookSum, encode_chord
from chordbook.diagrams import Coefficient
from chordbook.generators import random_booksum
from chordbook.link_model import disjoint_union, round_unknot
from chordbook.book_codec import skeleton_booksum
from chordbook.thread import infer_components, stage_sizes, thread, thread_embed


def test_stage_sizes():
    assert stage_sizes(2, 4, 2) == [8, 24, 48]  # (q+m)*(N+4m)


def test_embed_shifts_entries():
    s = BookSum(1, 4, ((Coefficient(1), Book(1, 4, (encode_chord((1, 2), (1, 3), 1, 4),))),))
    out = thread_embed(s)
    assert (out.q, out.N) == (2, 8)
    assert out.terms[0][1].pages[0].entries == ((6, 7, 1),)


def test_thread_matches_unknot_prepend():
    # the first strip block of a fresh round unknot sits in front of the old link
    link = round_unknot()
    assert disjoint_union(round_unknot(), link).layout.N == link.layout.N + 4
    s = skeleton_booksum(link)
    assert thread(s, 0) == s


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.integers(1, 3))
def test_infer_components(seed, steps):
    rng = random.Random(seed)
    q = rng.randint(1, 3)
    s = random_booksum(rng, q, rng.choice((4, 6)))
    if not any(b.pages for _, b in s.terms):
        return
    live = {(r - 1) // s.N for _, b in s.terms for p in b.pages for r, c, _ in p.entries} | \
           {(c - 1) // s.N for _, b in s.terms for p in b.pages for r, c, _ in p.entries}
    out = thread(s, steps)
    assert out.q == q + steps and out.N == s.N + 4 * steps
    assert infer_components(out, steps) == len(live)


def test_infer_all_zero_raises():
    with pytest.raises(ValueError):
        infer_components(BookSum(2, 8), 1)
