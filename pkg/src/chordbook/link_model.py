"""Morse-presented framed links and their vertical strip layout.

A link is an ordered word of elementary slices read bottom-up.  Each slice
records the number of live strands entering it (``width``) and one event:
a cup (local minimum), a cap (local maximum) or a group of half-twists
between two neighbouring strands.  Strand slots are 1-based and slot ``k``
sits at ``x = k``.

Levels are the horizontal gaps between slices: level ``l`` is the state
entering slice ``l``, so level 0 and level ``len(slices)`` are empty.  A
chord attached "at height h" sits on level ``h + 1``, directly above
slice ``h``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union


class LinkSyntaxError(ValueError):
    """Malformed link description text."""


class LinkValidationError(ValueError):
    """Well-formed text describing an inconsistent link word."""


@dataclass(frozen=True)
class Cup:
    pos: int


@dataclass(frozen=True)
class Cap:
    pos: int


@dataclass(frozen=True)
class CrossingGroup:
    pos: int
    eps: int
    n: int
    winding: str  # "cw" or "ccw"

    @property
    def swaps(self) -> bool:
        return self.n % 2 == 1


Event = Union[Cup, Cap, CrossingGroup]


@dataclass(frozen=True)
class EventSlice:
    width: int
    event: Event

    @property
    def out_width(self) -> int:
        if isinstance(self.event, Cup):
            return self.width + 2
        if isinstance(self.event, Cap):
            return self.width - 2
        return self.width


def _through(event: Event, slot: int) -> int | None:
    """Slot on the level above ``event`` reached by strand ``slot`` below it.

    Returns None when the strand ends in a cap.
    """
    if isinstance(event, Cup):
        return slot if slot < event.pos else slot + 2
    if isinstance(event, Cap):
        if slot < event.pos:
            return slot
        if slot > event.pos + 1:
            return slot - 2
        return None
    if event.swaps and slot == event.pos:
        return slot + 1
    if event.swaps and slot == event.pos + 1:
        return slot - 1
    return slot


@dataclass(frozen=True)
class Tracing:
    """Component label and direction of every strand slot on every level.

    ``comp[l][k - 1]`` is the component of slot ``k`` on level ``l`` and
    ``up[l][k - 1]`` is True when the strand runs upward there.
    """

    q: int
    comp: tuple[tuple[int, ...], ...]
    up: tuple[tuple[bool, ...], ...]
    first_cup: tuple[int, ...]  # slice index of each component's seed cup


def _level_widths(slices: tuple[EventSlice, ...]) -> list[int]:
    return [s.width for s in slices] + [0]


def _trace(slices: tuple[EventSlice, ...], orient: tuple[str, ...] | None) -> Tracing:
    widths = _level_widths(slices)
    offsets = [0]
    for w in widths:
        offsets.append(offsets[-1] + w)
    total = offsets[-1]

    def node(level: int, slot: int) -> int:
        return offsets[level] + slot - 1

    # adjacency with relation: True = same direction, False = reversed
    adj: list[list[tuple[int, bool]]] = [[] for _ in range(total)]

    def link(a: int, b: int, same: bool) -> None:
        adj[a].append((b, same))
        adj[b].append((a, same))

    for lev, sl in enumerate(slices):
        ev = sl.event
        for k in range(1, sl.width + 1):
            above = _through(ev, k)
            if above is not None:
                link(node(lev, k), node(lev + 1, above), True)
        if isinstance(ev, Cup):
            link(node(lev + 1, ev.pos), node(lev + 1, ev.pos + 1), False)
        elif isinstance(ev, Cap):
            link(node(lev, ev.pos), node(lev, ev.pos + 1), False)

    comp = [0] * total
    up = [False] * total
    seeds: list[int] = []
    for lev, sl in enumerate(slices):
        if not isinstance(sl.event, Cup):
            continue
        right = node(lev + 1, sl.event.pos + 1)
        if comp[right]:
            continue
        label = len(seeds) + 1
        seeds.append(lev)
        flip = orient is not None and len(orient) >= label and orient[label - 1] == "-"
        comp[right] = label
        up[right] = not flip
        queue = deque([right])
        while queue:
            a = queue.popleft()
            for b, same in adj[a]:
                if comp[b]:
                    continue
                comp[b] = label
                up[b] = up[a] if same else not up[a]
                queue.append(b)

    per_comp = tuple(
        tuple(comp[offsets[lev]:offsets[lev + 1]]) for lev in range(len(widths))
    )
    per_up = tuple(tuple(up[offsets[lev]:offsets[lev + 1]]) for lev in range(len(widths)))
    return Tracing(q=len(seeds), comp=per_comp, up=per_up, first_cup=tuple(seeds))


def expected_sign(winding: str, same_orientation: bool) -> int:
    """Sign of a crossing group: same orientation + CCW is +1, CW is -1;
    opposite orientation flips it."""
    base = 1 if winding == "ccw" else -1
    return base if same_orientation else -base


@dataclass(frozen=True)
class MorseLink:
    slices: tuple[EventSlice, ...]
    orient: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "slices", tuple(self.slices))
        _check_widths(self.slices)
        tr = _trace(self.slices, self.orient or None)
        if self.orient:
            if len(self.orient) != tr.q:
                raise LinkValidationError(
                    f"orient lists {len(self.orient)} components, link has {tr.q}"
                )
            if any(o not in "+-" or len(o) != 1 for o in self.orient):
                raise LinkValidationError(f"bad orientation flags {self.orient}")
        else:
            object.__setattr__(self, "orient", ("+",) * tr.q)
        object.__setattr__(self, "_tracing", tr)
        for lev, sl in enumerate(self.slices):
            ev = sl.event
            if isinstance(ev, CrossingGroup):
                same = tr.up[lev][ev.pos - 1] == tr.up[lev][ev.pos]
                if ev.eps != expected_sign(ev.winding, same):
                    raise LinkValidationError(
                        f"slice {lev}: sign {ev.eps} inconsistent with winding "
                        f"{ev.winding} and {'same' if same else 'opposite'} orientation"
                    )

    @property
    def tracing(self) -> Tracing:
        return self._tracing  # type: ignore[attr-defined]

    @property
    def q(self) -> int:
        return self.tracing.q

    @property
    def n_levels(self) -> int:
        return len(self.slices) + 1

    def width_at(self, level: int) -> int:
        return self.slices[level].width if level < len(self.slices) else 0

    def comp_at(self, level: int, slot: int) -> int:
        return self.tracing.comp[level][slot - 1]

    def up_at(self, level: int, slot: int) -> bool:
        return self.tracing.up[level][slot - 1]

    def extrema(self) -> list[tuple[int, Event]]:
        return [(i, s.event) for i, s in enumerate(self.slices) if isinstance(s.event, (Cup, Cap))]

    def crossing_groups(self) -> list[tuple[int, CrossingGroup]]:
        return [(i, s.event) for i, s in enumerate(self.slices) if isinstance(s.event, CrossingGroup)]

    def group_components(self, index: int) -> tuple[int, int]:
        ev = self.slices[index].event
        assert isinstance(ev, CrossingGroup)
        return self.comp_at(index, ev.pos), self.comp_at(index, ev.pos + 1)

    @cached_property
    def layout(self) -> "StripLayout":
        return slice_strips(self)


def _check_widths(slices: tuple[EventSlice, ...]) -> None:
    width = 0
    for i, sl in enumerate(slices):
        if sl.width != width:
            raise LinkValidationError(f"slice {i}: width {sl.width}, expected {width}")
        ev = sl.event
        if isinstance(ev, Cup):
            if not 1 <= ev.pos <= width + 1:
                raise LinkValidationError(f"slice {i}: cup position {ev.pos} out of range")
        else:
            if not (1 <= ev.pos and ev.pos + 1 <= width):
                raise LinkValidationError(f"slice {i}: position {ev.pos} out of range")
            if isinstance(ev, CrossingGroup):
                if ev.eps not in (1, -1):
                    raise LinkValidationError(f"slice {i}: sign must be +1 or -1")
                if ev.n < 1:
                    raise LinkValidationError(f"slice {i}: half-twist count must be >= 1")
                if ev.winding not in ("cw", "ccw"):
                    raise LinkValidationError(f"slice {i}: winding must be cw or ccw")
        width = sl.out_width
    if width != 0:
        raise LinkValidationError(f"word ends with {width} live strands")


def build_link(events: Iterable[tuple], orient: Iterable[str] | None = None) -> MorseLink:
    """Build a link from bare events, filling in widths and crossing signs.

    Events are ``("cup", pos)``, ``("cap", pos)`` or ``("xg", pos, n, winding)``;
    each group's sign is derived from its winding and the traced orientations.
    """
    raw: list[EventSlice] = []
    width = 0
    for ev in events:
        kind = ev[0]
        if kind == "cup":
            e: Event = Cup(ev[1])
        elif kind == "cap":
            e = Cap(ev[1])
        elif kind == "xg":
            e = CrossingGroup(ev[1], 1, ev[2], ev[3])
        else:
            raise LinkSyntaxError(f"unknown event {kind!r}")
        sl = EventSlice(width, e)
        raw.append(sl)
        width = sl.out_width
    slices = tuple(raw)
    _check_widths(slices)
    orient_t = tuple(orient) if orient is not None else None
    tr = _trace(slices, orient_t)
    fixed = []
    for lev, sl in enumerate(slices):
        ev = sl.event
        if isinstance(ev, CrossingGroup):
            same = tr.up[lev][ev.pos - 1] == tr.up[lev][ev.pos]
            ev = CrossingGroup(ev.pos, expected_sign(ev.winding, same), ev.n, ev.winding)
        fixed.append(EventSlice(sl.width, ev))
    return MorseLink(tuple(fixed), orient_t or ())


def disjoint_union(a: MorseLink, b: MorseLink) -> MorseLink:
    """Place ``b`` to the right of the last arc of ``a``, unlinked from it.

    Components of ``a`` keep their labels; those of ``b`` follow.
    """
    head = a.slices[:-1]
    last = a.slices[-1]
    mid = []
    for sl in b.slices:
        ev = sl.event
        if isinstance(ev, Cup):
            shifted: Event = Cup(ev.pos + 2)
        elif isinstance(ev, Cap):
            shifted = Cap(ev.pos + 2)
        else:
            shifted = CrossingGroup(ev.pos + 2, ev.eps, ev.n, ev.winding)
        mid.append(EventSlice(sl.width + 2, shifted))
    return MorseLink(head + tuple(mid) + (last,), a.orient + b.orient)


def round_unknot() -> MorseLink:
    return MorseLink((EventSlice(0, Cup(1)), EventSlice(2, Cap(1))))


# ---------------------------------------------------------------- JSON


def parse_morse_link(text: str) -> MorseLink:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LinkSyntaxError(str(exc)) from exc
    return link_from_obj(data)


def link_from_obj(data) -> MorseLink:
    if not isinstance(data, dict) or not isinstance(data.get("slices"), list):
        raise LinkSyntaxError('expected an object with a "slices" array')
    slices = []
    for i, item in enumerate(data["slices"]):
        try:
            w = item["w"]
            ev = item["ev"]
            kind = ev[0]
            if kind == "cup":
                (pos,) = ev[1:]
                e: Event = Cup(pos)
            elif kind == "cap":
                (pos,) = ev[1:]
                e = Cap(pos)
            elif kind == "xg":
                pos, eps, n, wind = ev[1:]
                e = CrossingGroup(pos, eps, n, wind)
            else:
                raise LinkSyntaxError(f"slice {i}: unknown event {kind!r}")
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            if isinstance(exc, LinkSyntaxError):
                raise
            raise LinkSyntaxError(f"slice {i}: malformed entry {item!r}") from exc
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in [w, e.pos]):
            raise LinkSyntaxError(f"slice {i}: integer fields expected")
        slices.append(EventSlice(w, e))
    orient = data.get("orient")
    if orient is not None and (
        not isinstance(orient, list) or any(o not in ("+", "-") for o in orient)
    ):
        raise LinkSyntaxError('"orient" must be an array of "+" / "-"')
    return MorseLink(tuple(slices), tuple(orient) if orient else ())


def link_to_obj(link: MorseLink) -> dict:
    out = []
    for sl in link.slices:
        ev = sl.event
        if isinstance(ev, Cup):
            e: list = ["cup", ev.pos]
        elif isinstance(ev, Cap):
            e = ["cap", ev.pos]
        else:
            e = ["xg", ev.pos, ev.eps, ev.n, ev.winding]
        out.append({"w": sl.width, "ev": e})
    obj: dict = {"slices": out}
    if "-" in link.orient:
        obj["orient"] = list(link.orient)
    return obj


def serialize_morse_link(link: MorseLink) -> str:
    return json.dumps(link_to_obj(link), separators=(",", ":"))


def trace_components(link: MorseLink) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[bool, ...], ...]]:
    tr = link.tracing
    return tr.comp, tr.up


# ---------------------------------------------------------------- strips


@dataclass(frozen=True)
class StripLayout:
    N: int
    boundaries: tuple[Fraction, ...]
    strip_of: dict = field(compare=False)  # (height, slot) -> strip
    apex_strip: dict = field(compare=False)  # extremum slice index -> strip

    def strip_left_of(self, x: Fraction) -> int:
        """Strip whose right edge is the boundary at ``x``."""
        return self.boundaries.index(x) + 1

    def strip_containing(self, x: Fraction) -> int:
        """Strip holding ``x``; a point on a boundary goes to the right."""
        return sum(1 for b in self.boundaries if b <= x) + 1


def slice_strips(link: MorseLink) -> StripLayout:
    half = Fraction(1, 2)
    lefts: set[Fraction] = set()
    rights: set[Fraction] = set()
    lines: set[Fraction] = set()
    for _, ev in link.extrema():
        p = Fraction(ev.pos)
        lefts.add(p)
        rights.add(p + 1)
        lines.update((p, p + half, p + 1))
    ordered = sorted(lines)
    # split gaps lying outside every extremum so each flank keeps its own strip
    for a, b in zip(ordered, ordered[1:]):
        if a in rights and b in lefts:
            lines.add(a + half)
    bounds = tuple(sorted(lines))
    N = len(bounds) + 1
    index = {b: i for i, b in enumerate(bounds)}

    def inner_left(p: int) -> int:  # strip (p, p + 1/2)
        return index[Fraction(p)] + 2

    def slot_strip(k: int) -> int:
        # a strand on a line sits inside the extremum that owns the line
        x = Fraction(k)
        if x in rights and x not in lefts:
            return index[x] + 1
        return sum(1 for b in bounds if b <= x) + 1

    strip_of: dict[tuple[int, int], int] = {}
    for h in range(len(link.slices) - 1):
        for k in range(1, link.slices[h].out_width + 1):
            strip_of[(h, k)] = slot_strip(k)
    apex = {i: inner_left(ev.pos) for i, ev in link.extrema()}
    return StripLayout(N=N, boundaries=bounds, strip_of=strip_of, apex_strip=apex)


# ---------------------------------------------------------------- hooks


@dataclass(frozen=True)
class HookedLink:
    base: MorseLink
    hooked_maxima: frozenset[int]

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def layout(self) -> StripLayout:
        return self.base.layout


def mark_hooks(link: MorseLink) -> HookedLink:
    """Hook every local maximum except the topmost one of each component."""
    by_comp: dict[int, list[int]] = {}
    for i, sl in enumerate(link.slices):
        if isinstance(sl.event, Cap):
            by_comp.setdefault(link.comp_at(i, sl.event.pos), []).append(i)
    hooked = set()
    for maxima in by_comp.values():
        hooked.update(sorted(maxima)[:-1])
    return HookedLink(link, frozenset(hooked))
