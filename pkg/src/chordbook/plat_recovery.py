"""Recovering a plat's strand permutation from degree-one parities.

In a plat every strand runs monotonically from the bottom row of minima to
the top row of maxima.  Two strands meet an odd number of times exactly
when they end up in swapped order, so the half-integer part of their
degree-one coefficient reveals every inversion of the permutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .link_model import Cap, Cup, CrossingGroup, MorseLink, _through


class InconsistentParity(ValueError):
    """The parity data is not the inversion set of any permutation."""


@dataclass(frozen=True)
class Degree1Table:
    """``pairs[(a, b)] = (logpart, halfpart)`` for strands labelled by top position."""

    pairs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (a, b), (logpart, half) in self.pairs.items():
            half = Fraction(half)
            if half.denominator not in (1, 2):
                raise ValueError(f"half part {half} of pair ({a},{b}) is not a half-integer")
            key = (min(a, b), max(a, b))
            clean[key] = (float(logpart), half)
        object.__setattr__(self, "pairs", clean)

    def to_json(self) -> dict:
        return {"pairs": [[a, b, lp, h.numerator, h.denominator]
                          for (a, b), (lp, h) in sorted(self.pairs.items())]}

    @classmethod
    def from_json(cls, obj) -> "Degree1Table":
        pairs = {}
        for a, b, lp, num, den in obj["pairs"]:
            pairs[(a, b)] = (lp, Fraction(num, den))
        return cls(pairs)


def parity_matrix(t: Degree1Table, strands: int) -> list[list[bool]]:
    P = [[False] * strands for _ in range(strands)]
    for (a, b), (_, half) in t.pairs.items():
        if not (1 <= a <= strands and 1 <= b <= strands):
            raise ValueError(f"pair ({a},{b}) outside 1..{strands}")
        odd = half.denominator == 2
        P[a - 1][b - 1] = P[b - 1][a - 1] = odd
    return P


def plat_permutation(p: list[list[bool]]) -> tuple[int, ...]:
    """Bottom position of the strand ending at each top position (1-based).

    A strand moves one place right for every odd partner that starts to its
    right and one place left for every odd partner starting to its left.
    """
    n = len(p)
    for a in range(n):
        if p[a][a] or any(p[a][b] != p[b][a] for b in range(n)):
            raise InconsistentParity("parity matrix must be symmetric with a false diagonal")
    image = []
    for a in range(n):
        left = sum(p[a][b] for b in range(a))
        right = sum(p[a][b] for b in range(a + 1, n))
        image.append(a + 1 - left + right)
    if sorted(image) != list(range(1, n + 1)):
        raise InconsistentParity(f"toggle rule gives non-permutation {image}")
    for a in range(n):
        for b in range(a + 1, n):
            if (image[a] > image[b]) != p[a][b]:
                raise InconsistentParity(f"pair ({a + 1},{b + 1}) parity disagrees with the wiring")
    return tuple(image)


# ---------------------------------------------------------------- plat links


def plat_region(link: MorseLink) -> tuple[int, int]:
    """Slice range ``[first, last)`` of the braid between the two extremum rows."""
    events = [s.event for s in link.slices]
    first = 0
    while first < len(events) and isinstance(events[first], Cup):
        first += 1
    last = first
    while last < len(events) and isinstance(events[last], CrossingGroup):
        last += 1
    if any(not isinstance(e, Cap) for e in events[last:]):
        raise ValueError("not a plat: extrema must sit in a bottom and a top row")
    return first, last


def plat_strands(link: MorseLink) -> tuple[int, list[int]]:
    """Strand count and, for each top position, the bottom position it starts from."""
    first, last = plat_region(link)
    width = link.width_at(first)
    top_of_bottom = {}
    for b in range(1, width + 1):
        slot = b
        for i in range(first, last):
            slot = _through(link.slices[i].event, slot)
        top_of_bottom[slot] = b
    return width, [top_of_bottom[a] for a in range(1, width + 1)]


def degree1_table(link: MorseLink, logparts: dict | None = None) -> Degree1Table:
    """Half-integer parts ``sum eps*n/2`` per strand pair, labelled by top position."""
    first, last = plat_region(link)
    width = link.width_at(first)
    _, perm = plat_strands(link)
    top_of = {b: a for a, b in enumerate(perm, start=1)}
    at = list(range(1, width + 1))  # at[slot-1] = bottom label of the strand there
    acc: dict[tuple[int, int], Fraction] = {}
    for i in range(first, last):
        g = link.slices[i].event
        a, b = top_of[at[g.pos - 1]], top_of[at[g.pos]]
        key = (min(a, b), max(a, b))
        acc[key] = acc.get(key, Fraction(0)) + Fraction(g.eps * g.n, 2)
        if g.swaps:
            at[g.pos - 1], at[g.pos] = at[g.pos], at[g.pos - 1]
    logparts = logparts or {}
    return Degree1Table({k: (logparts.get(k, 0.0), v) for k, v in acc.items()})
