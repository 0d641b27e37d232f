"""Random links, plats, diagrams and book sums for property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .book_codec import Book, BookSum, Page, canonicalize
from .diagrams import (
    Coefficient,
    DiagramSum,
    TangleChordDiagram,
    diagram_on_link,
    make_chord,
    sum_canonicalize,
)
from .link_model import MorseLink, build_link

WINDINGS = ("cw", "ccw")


def random_link(rng: random.Random, max_width: int = 6, length: int = 10,
                q_max: int | None = None, min_groups: int = 0) -> MorseLink:
    """Random closed Morse word with random crossing groups and orientations."""
    while True:
        events, width = [], 0
        for _ in range(length):
            options = ["xg"] * (width >= 2) * 2 + ["cap"] * (width >= 2) + ["cup"] * (width + 2 <= max_width)
            if width == 0:
                options = ["cup"]
            kind = rng.choice(options)
            if kind == "cup":
                events.append(("cup", rng.randint(1, width + 1)))
                width += 2
            elif kind == "cap":
                events.append(("cap", rng.randint(1, width - 1)))
                width -= 2
            else:
                events.append(("xg", rng.randint(1, width - 1), rng.randint(1, 3), rng.choice(WINDINGS)))
        while width:
            events.append(("cap", rng.randint(1, width - 1)))
            width -= 2
        base = build_link(events)
        if q_max is not None and base.q > q_max:
            continue
        if len(base.crossing_groups()) < min_groups:
            continue
        orient = [rng.choice("+-") for _ in range(base.q)]
        return build_link(events, orient)


def random_plat(rng: random.Random, max_strands: int = 6, max_groups: int = 8) -> MorseLink:
    """Plat on ``2k`` strands: a row of cups, a random braid of twist groups, a row of caps."""
    k = rng.randint(1, max_strands // 2)
    events: list[tuple] = [("cup", 2 * i + 1) for i in range(k)]
    if k > 1 or rng.random() < 0.5:
        for _ in range(rng.randint(0, max_groups)):
            events.append(("xg", rng.randint(1, 2 * k - 1), rng.randint(1, 3), rng.choice(WINDINGS)))
    events += [("cap", 1)] * k
    return build_link(events)


def random_cell(rng: random.Random, q: int, N: int) -> tuple[int, int]:
    return rng.randint(1, q), rng.randint(1, N)


def random_diagram(rng: random.Random, q: int, N: int, max_chords: int = 3,
                   flipped: frozenset = frozenset()) -> TangleChordDiagram:
    """Chord diagram given only by cells; heights are distinct but otherwise arbitrary."""
    m = rng.randint(0, max_chords)
    heights = sorted(rng.sample(range(20), m))
    chords = tuple(make_chord(h, random_cell(rng, q, N), random_cell(rng, q, N)) for h in heights)
    return TangleChordDiagram(q, N, chords, flipped)


def random_coefficient(rng: random.Random) -> Coefficient:
    return Coefficient(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                       Fraction(rng.randint(-2, 2), rng.randint(1, 3)) if rng.random() < 0.3 else 0)


def random_diagram_sum(rng: random.Random, q: int, N: int, terms: int = 3, max_chords: int = 3) -> DiagramSum:
    return sum_canonicalize(DiagramSum(tuple(
        (random_coefficient(rng), random_diagram(rng, q, N, max_chords)) for _ in range(terms)
    )))


def random_page(rng: random.Random, q: int, N: int, max_chords: int = 2, signed: bool = True) -> Page:
    acc: dict[tuple[int, int], int] = {}
    for _ in range(rng.randint(1, max_chords)):
        r = (rng.randint(1, q) - 1) * N + rng.randint(1, N)
        c = (rng.randint(1, q) - 1) * N + rng.randint(1, N)
        r, c = min(r, c), max(r, c)
        v = (2 if r == c else 1) * (rng.choice((1, -1)) if signed else 1)
        acc[(r, c)] = acc.get((r, c), 0) + v
    return Page.from_dict(q, N, acc)


def random_booksum(rng: random.Random, q: int, N: int, terms: int = 4, max_pages: int = 3,
                   max_chords: int = 2) -> BookSum:
    """Random sum of books whose pages may carry several signed chords."""
    out = []
    for _ in range(terms):
        pages = tuple(random_page(rng, q, N, max_chords) for _ in range(rng.randint(0, max_pages)))
        out.append((random_coefficient(rng), Book(q, N, pages)))
    return canonicalize(BookSum(q, N, tuple(out)))


def unit_pages(q: int, N: int):
    """Every single-chord page over ``q`` components and ``N`` strips."""
    dim = q * N
    for r in range(1, dim + 1):
        for c in range(r, dim + 1):
            yield Page(q, N, ((r, c, 2 if r == c else 1),))


# ---------------------------------------------------------------- Reidemeister pairs


def _frame(rng: random.Random, width: int) -> tuple[list[tuple], list[tuple]]:
    """Cups reaching ``width`` live strands, and caps closing them again."""
    prefix, w = [], 0
    while w < width:
        prefix.append(("cup", rng.randint(1, w + 1)))
        w += 2
    suffix = []
    while w:
        suffix.append(("cap", rng.randint(1, w - 1)))
        w -= 2
    return prefix, suffix


def reidemeister_pair(rng: random.Random, kind: str, spectators: int = 2):
    """Two sides of an Omega-2 or Omega-3 move with up to ``spectators`` chords.

    One chord may sit directly below the move region and one just above the
    first cap after it.  Below an Omega-2 region the chord avoids the two
    strands of the move.
    """
    width = rng.choice((4, 6)) if kind == "omega3" else rng.choice((2, 4, 6))
    prefix, suffix = _frame(rng, width)
    w = rng.choice(WINDINGS)
    other = "cw" if w == "ccw" else "ccw"
    if kind == "omega2":
        p = rng.randint(1, width - 1)
        left_mid = [("xg", p, 1, w), ("xg", p, 1, other)]
        right_mid: list[tuple] = []
        busy = {p, p + 1}
    elif kind == "omega3":
        p = rng.randint(1, width - 2)
        left_mid = [("xg", p, 1, w), ("xg", p + 1, 1, w), ("xg", p, 1, w)]
        right_mid = [("xg", p + 1, 1, w), ("xg", p, 1, w), ("xg", p + 1, 1, w)]
        busy = set()
    else:
        raise ValueError(kind)
    left = build_link(prefix + left_mid + suffix)
    orient = [rng.choice("+-") for _ in range(left.q)]
    left = build_link(prefix + left_mid + suffix, orient)
    right = build_link(prefix + right_mid + suffix, orient)

    free_below = [s for s in range(1, width + 1) if s not in busy]
    chords_l, chords_r = [], []
    places = rng.sample(("below", "above"), rng.randint(0, min(spectators, 2)))
    if "below" in places and len(free_below) >= 2:
        a, b = rng.sample(free_below, 2)
        chords_l.append((len(prefix) - 1, a, b))
        chords_r.append((len(prefix) - 1, a, b))
    if "above" in places and width >= 4:
        # one slice past the region, so it never shares a level with a chord below
        a, b = rng.sample(range(1, width - 1), 2)
        chords_l.append((len(prefix) + len(left_mid), a, b))
        chords_r.append((len(prefix) + len(right_mid), a, b))
    return diagram_on_link(left, chords_l), diagram_on_link(right, chords_r)
