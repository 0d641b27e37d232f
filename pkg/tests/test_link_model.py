import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chordbook.generators import random_link
from chordbook.link_model import (
    Cap,
    Cup,
    LinkSyntaxError,
    LinkValidationError,
    build_link,
    disjoint_union,
    mark_hooks,
    parse_morse_link,
    round_unknot,
    serialize_morse_link,
    slice_strips,
    trace_components,
)

UNKNOT_TEXT = '{"slices":[{"w":0,"ev":["cup",1]},{"w":2,"ev":["cap",1]}]}'
HOPF_TEXT = (
    '{"slices":[{"w":0,"ev":["cup",1]},{"w":2,"ev":["cup",1]},{"w":4,"ev":["xg",2,1,2,"ccw"]},'
    '{"w":4,"ev":["cap",1]},{"w":2,"ev":["cap",1]}],"orient":["+","-"]}'
)


def union_find_components(link):
    """Independent oracle: union-find over (level, slot) nodes."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for lev, sl in enumerate(link.slices):
        ev = sl.event
        for k in range(1, sl.width + 1):
            if isinstance(ev, Cup):
                up = k if k < ev.pos else k + 2
            elif isinstance(ev, Cap):
                if k in (ev.pos, ev.pos + 1):
                    continue
                up = k if k < ev.pos else k - 2
            else:
                up = k
                if ev.n % 2 and k == ev.pos:
                    up = k + 1
                elif ev.n % 2 and k == ev.pos + 1:
                    up = k - 1
            union((lev, k), (lev + 1, up))
        if isinstance(ev, Cup):
            union((lev + 1, ev.pos), (lev + 1, ev.pos + 1))
        if isinstance(ev, Cap):
            union((lev, ev.pos), (lev, ev.pos + 1))
    return len({find(x) for x in list(parent)})


def test_parse_unknot():
    link = parse_morse_link(UNKNOT_TEXT)
    assert link.q == 1
    assert serialize_morse_link(link) == UNKNOT_TEXT


def test_parse_hopf_round_trip():
    link = parse_morse_link(HOPF_TEXT)
    assert link.q == 2
    assert serialize_morse_link(link) == HOPF_TEXT
    assert union_find_components(link) == 2


def test_open_word_rejected():
    with pytest.raises(LinkValidationError):
        parse_morse_link('{"slices":[{"w":0,"ev":["cup",1]},{"w":2,"ev":["xg",1,1,1,"ccw"]}]}')


def test_width_mismatch_rejected():
    with pytest.raises(LinkValidationError):
        parse_morse_link('{"slices":[{"w":0,"ev":["cup",1]},{"w":4,"ev":["cap",1]}]}')


@pytest.mark.parametrize("text", ["{", '{"slices":3}', '{"slices":[{"w":0,"ev":["loop",1]}]}',
                                  '{"slices":[{"w":0}]}'])
def test_syntax_errors(text):
    with pytest.raises(LinkSyntaxError):
        parse_morse_link(text)


def test_sign_must_match_winding():
    bad = HOPF_TEXT.replace('["xg",2,1,2,"ccw"]', '["xg",2,-1,2,"ccw"]')
    with pytest.raises(LinkValidationError):
        parse_morse_link(bad)


def test_sign_rule_opposite_orientation_flips():
    # with both components "+", the two strands at the group run opposite ways
    link = build_link([("cup", 1), ("cup", 1), ("xg", 2, 2, "ccw"), ("cap", 1), ("cap", 1)])
    assert link.slices[2].event.eps == -1
    link = build_link([("cup", 1), ("cup", 1), ("xg", 2, 2, "ccw"), ("cap", 1), ("cap", 1)], ["+", "-"])
    assert link.slices[2].event.eps == 1


def test_trace_unknot_all_one(unknot):
    comp, up = trace_components(unknot)
    assert all(c == 1 for row in comp for c in row)
    assert up[1] == (False, True)


def test_trace_hopf_labels(hopf):
    comp, _ = trace_components(hopf)
    # the second cup opens component 2 on the left; the group joins slots 2 and 3
    assert comp[2] == (2, 2, 1, 1)
    assert comp[3] == (2, 2, 1, 1)  # even group: no exchange
    assert hopf.group_components(2) == (2, 1)


def test_trace_disjoint_unknots(unknot):
    two = disjoint_union(unknot, unknot)
    comp, _ = trace_components(two)
    assert two.q == 2
    assert comp[2] == (1, 1, 2, 2)


def test_unknot_strips(unknot):
    lay = slice_strips(unknot)
    assert lay.boundaries == (Fraction(1), Fraction(3, 2), Fraction(2))
    assert lay.N == 4
    assert lay.strip_of[(0, 1)] == 2 and lay.strip_of[(0, 2)] == 3


def test_two_unknots_eight_strips(unknot):
    assert slice_strips(disjoint_union(unknot, unknot)).N == 8


def test_hump_occupies_eight_strips():
    # extrema over slots (1,2), (3,4) and (4,5): eight strips between x=1 and x=5
    link = build_link([("cup", 1), ("cup", 3), ("cup", 4), ("cap", 4), ("cap", 3), ("cap", 1)])
    lay = link.layout
    inner = [b for b in lay.boundaries if 1 < b <= 5]
    assert len(inner) == 8


def test_apex_strips_distinct_per_level(hopf):
    lay = hopf.layout
    for i, ev in hopf.extrema():
        lo = ev.pos
        assert lay.boundaries[lay.apex_strip[i] - 2] == lo


def test_mark_hooks_counts(unknot):
    assert mark_hooks(unknot).hooked_maxima == frozenset()
    two_max = build_link([("cup", 1), ("cup", 3), ("cap", 2), ("cap", 1)])
    assert two_max.q == 1
    assert mark_hooks(two_max).hooked_maxima == frozenset({2})  # the lower maximum


def test_mark_hooks_three_components():
    w = build_link([("cup", 1), ("cup", 3), ("cap", 2), ("cap", 1)])
    three = disjoint_union(disjoint_union(w, w), w)
    assert three.q == 3
    assert len(mark_hooks(three).hooked_maxima) == 3


def _apex_isolation(link):
    lay = link.layout
    ext = link.extrema()
    for i, ev in ext:
        s = lay.apex_strip[i]
        left, right = lay.boundaries[s - 2], lay.boundaries[s - 1]
        assert left == ev.pos and right == ev.pos + Fraction(1, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_random_links_invariants(seed):
    rng = random.Random(seed)
    link = random_link(rng, max_width=6, length=10)
    assert union_find_components(link) == link.q
    _apex_isolation(link)
    text = serialize_morse_link(link)
    assert serialize_morse_link(parse_morse_link(text)) == text
    prepended = disjoint_union(round_unknot(), link)
    assert prepended.layout.N == link.layout.N + 4
