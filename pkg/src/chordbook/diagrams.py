"""Tangle chord diagrams on a Morse link and their exact formal sums."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional

from .link_model import Cap, CrossingGroup, MorseLink, _through


class Coefficient:
    """Exact complex rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, value) -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        return cls(value)

    def __add__(self, other):
        o = Coefficient.of(other)
        return Coefficient(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-Coefficient.of(other))

    def __rsub__(self, other):
        return Coefficient.of(other) - self

    def __mul__(self, other):
        o = Coefficient.of(other)
        return Coefficient(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Rational, Coefficient)):
            o = Coefficient.of(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"Coefficient({self.re})"
        return f"Coefficient({self.re}, {self.im})"

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_json(self) -> list[int]:
        return [self.re.numerator, self.re.denominator, self.im.numerator, self.im.denominator]

    @classmethod
    def from_json(cls, data) -> "Coefficient":
        a, b, c, d = data
        return cls(Fraction(a, b), Fraction(c, d))


@dataclass(frozen=True, order=True)
class ChordFoot:
    comp: int
    strip: int
    slot: int = 0
    height: int = 0

    @property
    def cell(self) -> tuple[int, int]:
        return (self.comp, self.strip)


@dataclass(frozen=True, order=True)
class Chord:
    """A horizontal chord at ``height`` joining two feet; feet are kept sorted."""

    height: int
    a: ChordFoot
    b: ChordFoot

    def __post_init__(self):
        if self.a.height != self.height or self.b.height != self.height:
            raise ValueError("both feet of a chord must sit at the chord height")
        if (self.b.cell, self.b.slot) < (self.a.cell, self.a.slot):
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def feet(self) -> tuple[ChordFoot, ChordFoot]:
        return (self.a, self.b)

    def key(self) -> tuple:
        return (self.height, self.a.cell, self.b.cell, self.a.slot, self.b.slot)


def make_chord(height: int, a: tuple, b: tuple) -> Chord:
    """Chord from bare ``(comp, strip[, slot])`` tuples."""
    fa = ChordFoot(*a[:3], height=height) if len(a) >= 3 else ChordFoot(a[0], a[1], 0, height)
    fb = ChordFoot(*b[:3], height=height) if len(b) >= 3 else ChordFoot(b[0], b[1], 0, height)
    return Chord(height, fa, fb)


@dataclass(frozen=True)
class TangleChordDiagram:
    q: int
    N: int
    chords: tuple[Chord, ...] = ()
    flipped: frozenset = frozenset()
    link: Optional[MorseLink] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        chords = tuple(sorted(self.chords, key=Chord.key))
        heights = [c.height for c in chords]
        if len(set(heights)) != len(heights):
            raise ValueError("two chords share a height")
        for c in chords:
            for f in c.feet:
                if not (1 <= f.comp <= self.q and 1 <= f.strip <= self.N):
                    raise ValueError(f"foot {f} outside q={self.q}, N={self.N}")
        object.__setattr__(self, "chords", chords)
        object.__setattr__(self, "flipped", frozenset(self.flipped))

    @property
    def degree(self) -> int:
        return len(self.chords)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(c.key() for c in self.chords), tuple(sorted(self.flipped)),
                self.q, self.N)

    def with_chords(self, chords: Iterable[Chord]) -> "TangleChordDiagram":
        return replace(self, chords=tuple(chords))


@dataclass(frozen=True)
class DiagramSum:
    terms: tuple[tuple[Coefficient, TangleChordDiagram], ...] = ()

    def __add__(self, other: "DiagramSum") -> "DiagramSum":
        return sum_canonicalize(DiagramSum(self.terms + other.terms))

    def scale(self, c) -> "DiagramSum":
        c = Coefficient.of(c)
        return sum_canonicalize(DiagramSum(tuple((c * k, d) for k, d in self.terms)))

    def __len__(self):
        return len(self.terms)


def sum_canonicalize(s: DiagramSum) -> DiagramSum:
    merged: dict[TangleChordDiagram, Coefficient] = {}
    for c, d in s.terms:
        merged[d] = merged.get(d, Coefficient()) + c
    kept = [(c, d) for d, c in merged.items() if c]
    kept.sort(key=lambda t: t[1].sort_key())
    return DiagramSum(tuple(kept))


def single(d: TangleChordDiagram, c=1) -> DiagramSum:
    return DiagramSum(((Coefficient.of(c), d),))


# ---------------------------------------------------------------- on a link


def foot_on_link(link: MorseLink, height: int, slot: int) -> ChordFoot:
    """Foot on strand ``slot`` of the level directly above slice ``height``."""
    if not 0 <= height <= len(link.slices) - 2:
        raise ValueError(f"height {height} has no interior level above it")
    if not 1 <= slot <= link.slices[height].out_width:
        raise ValueError(f"slot {slot} not live above slice {height}")
    return ChordFoot(link.comp_at(height + 1, slot), link.layout.strip_of[(height, slot)],
                     slot, height)


def chord_on_link(link: MorseLink, height: int, slot_a: int, slot_b: int) -> Chord:
    if slot_a == slot_b:
        raise ValueError("a chord needs two distinct strand points")
    return Chord(height, foot_on_link(link, height, slot_a), foot_on_link(link, height, slot_b))


def diagram_on_link(link: MorseLink, chords: Iterable[tuple[int, int, int]]) -> TangleChordDiagram:
    """Diagram from ``(height, slot_a, slot_b)`` triples."""
    return TangleChordDiagram(
        link.q, link.layout.N,
        tuple(chord_on_link(link, h, a, b) for h, a, b in chords),
        link=link,
    )


def _blocks(event, slots: tuple[int, int]) -> bool:
    if isinstance(event, Cap):
        return any(s in (event.pos, event.pos + 1) for s in slots)
    if isinstance(event, CrossingGroup):
        return any(s in (event.pos, event.pos + 1) for s in slots)
    return False


def lift_chords(d: TangleChordDiagram) -> TangleChordDiagram:
    """Slide every chord upward until a maximum, a crossing or another chord stops it."""
    link = d.link
    if link is None:
        raise ValueError("lifting needs the diagram's link")
    top = len(link.slices) - 2
    placed: list[tuple[int, int, int]] = []
    occupied = {c.height for c in d.chords}
    for c in sorted(d.chords, key=lambda c: -c.height):
        h, sa, sb = c.height, c.a.slot, c.b.slot
        occupied.discard(h)
        while h < top:
            above = link.slices[h + 1].event
            if _blocks(above, (sa, sb)) or (h + 1) in occupied:
                break
            sa, sb = _through(above, sa), _through(above, sb)
            h += 1
        occupied.add(h)
        placed.append((h, sa, sb))
    lifted = tuple(chord_on_link(link, h, a, b) for h, a, b in placed)
    return TangleChordDiagram(d.q, d.N, lifted, d.flipped, link=link)


def skeleton_diagrams(link: MorseLink) -> DiagramSum:
    """Every distinct lifted single-chord diagram on ``link``, each with coefficient 1."""
    seen = set()
    for h in range(len(link.slices) - 1):
        w = link.slices[h].out_width
        for a in range(1, w + 1):
            for b in range(a + 1, w + 1):
                seen.add(lift_chords(diagram_on_link(link, [(h, a, b)])))
    return sum_canonicalize(DiagramSum(tuple((Coefficient(1), d) for d in seen)))


# ---------------------------------------------------------------- JSON


def chord_to_json(c: Chord) -> dict:
    return {"h": c.height, "a": [c.a.comp, c.a.strip, c.a.slot], "b": [c.b.comp, c.b.strip, c.b.slot]}


def chord_from_json(obj) -> Chord:
    return make_chord(obj["h"], tuple(obj["a"]), tuple(obj["b"]))


def diagram_sum_to_json(s: DiagramSum) -> list:
    return [{"c": c.to_json(), "x": [chord_to_json(ch) for ch in d.chords]} for c, d in s.terms]


def diagram_sum_from_json(data, q: int, N: int) -> DiagramSum:
    terms = []
    for t in data:
        chords = tuple(chord_from_json(x) for x in t["x"])
        terms.append((Coefficient.from_json(t["c"]), TangleChordDiagram(q, N, chords)))
    return sum_canonicalize(DiagramSum(tuple(terms)))
