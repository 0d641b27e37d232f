"""Pages, books and book sums: the matrix shadow of chord diagrams.

A page is a symmetric ``qN x qN`` integer matrix.  Row ``(comp - 1) * N +
strip`` stands for strip ``strip`` of component ``comp``.  A chord with feet
in cells ``u != v`` contributes ``E_uv + E_vu``; a chord with both feet in
the same cell contributes the same formula, i.e. a diagonal ``2``.  With that
normalisation the entrywise sum of pages is additive over chords, and the
congruence moves multiply chords exactly as strand doubling does.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .diagrams import Coefficient, TangleChordDiagram, skeleton_diagrams


class MultiChordPage(ValueError):
    """A page that carries more than one chord where a single chord is required."""


@dataclass(frozen=True)
class Page:
    """Sparse symmetric page; ``entries`` holds ``(r, c, v)`` with ``r <= c`` and ``v != 0``."""

    q: int
    N: int
    entries: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        dim = self.q * self.N
        clean = []
        for r, c, v in self.entries:
            if r > c:
                r, c = c, r
            if not (1 <= r <= dim and 1 <= c <= dim):
                raise IndexError(f"entry ({r},{c}) outside {dim}x{dim}")
            if v:
                clean.append((r, c, int(v)))
        clean.sort()
        for (r1, c1, _), (r2, c2, _) in zip(clean, clean[1:]):
            if (r1, c1) == (r2, c2):
                raise ValueError(f"duplicate entry at ({r1},{c1})")
        object.__setattr__(self, "entries", tuple(clean))

    @classmethod
    def from_dict(cls, q: int, N: int, values: Mapping[tuple[int, int], int]) -> "Page":
        """Build from a dict keyed by upper-triangle positions."""
        return cls(q, N, tuple((r, c, v) for (r, c), v in values.items() if v))

    @property
    def dim(self) -> int:
        return self.q * self.N

    def full_entries(self) -> Iterable[tuple[int, int, int]]:
        """All nonzero entries of the symmetric matrix, both triangles."""
        for r, c, v in self.entries:
            yield r, c, v
            if r != c:
                yield c, r, v

    def get(self, r: int, c: int) -> int:
        if r > c:
            r, c = c, r
        for rr, cc, v in self.entries:
            if (rr, cc) == (r, c):
                return v
        return 0

    def cell(self, index: int) -> tuple[int, int]:
        return divmod(index - 1, self.N)[0] + 1, (index - 1) % self.N + 1

    def index(self, comp: int, strip: int) -> int:
        return (comp - 1) * self.N + strip

    def entry_sum(self) -> int:
        return sum(v for _, _, v in self.full_entries())

    def to_dense(self) -> list[list[int]]:
        m = [[0] * self.dim for _ in range(self.dim)]
        for r, c, v in self.full_entries():
            m[r - 1][c - 1] = v
        return m

    def __bool__(self):
        return bool(self.entries)


@dataclass(frozen=True)
class Book:
    q: int
    N: int
    pages: tuple[Page, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pages", tuple(self.pages))
        for p in self.pages:
            if (p.q, p.N) != (self.q, self.N):
                raise ValueError("page shape differs from book shape")

    def sort_key(self):
        return (len(self.pages), tuple(p.entries for p in self.pages))


@dataclass(frozen=True)
class BookSum:
    q: int
    N: int
    terms: tuple[tuple[Coefficient, Book], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for _, b in self.terms:
            if (b.q, b.N) != (self.q, self.N):
                raise ValueError("book shape differs from sum shape")

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "BookSum") -> "BookSum":
        if (self.q, self.N) != (other.q, other.N):
            raise ValueError("shape mismatch")
        return canonicalize(BookSum(self.q, self.N, self.terms + other.terms))


def canonicalize(s: BookSum) -> BookSum:
    merged: dict[Book, Coefficient] = {}
    for c, b in s.terms:
        merged[b] = merged.get(b, Coefficient()) + c
    kept = [(c, b) for b, c in merged.items() if c]
    kept.sort(key=lambda t: t[1].sort_key())
    return BookSum(s.q, s.N, tuple(kept))


# ---------------------------------------------------------------- encoding


def encode_chord(foot_a: tuple[int, int], foot_b: tuple[int, int], q: int, N: int,
                 sign: int = 1) -> Page:
    (s, n), (t, p) = foot_a, foot_b
    for comp, strip in (foot_a, foot_b):
        if not (1 <= comp <= q and 1 <= strip <= N):
            raise IndexError(f"cell ({comp},{strip}) outside q={q}, N={N}")
    r, c = (s - 1) * N + n, (t - 1) * N + p
    return Page(q, N, ((r, c, sign * (2 if r == c else 1)),))


def encode_diagram(d: TangleChordDiagram) -> Book:
    return Book(d.q, d.N, tuple(encode_chord(c.a.cell, c.b.cell, d.q, d.N) for c in d.chords))


def _single_chord(p: Page) -> tuple[tuple[int, int], tuple[int, int], int]:
    if len(p.entries) != 1:
        raise MultiChordPage(f"page has {len(p.entries)} distinct entries")
    r, c, v = p.entries[0]
    unit = 2 if r == c else 1
    if abs(v) != unit:
        raise MultiChordPage(f"entry value {v} at ({r},{c}) is not a single chord")
    return p.cell(r), p.cell(c), v // unit


def decode_page(p: Page) -> tuple[tuple[int, int], tuple[int, int]]:
    a, b, _ = _single_chord(p)
    return a, b


def decode_book(b: Book) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    return [decode_page(p) for p in b.pages]


def page_sign(p: Page) -> int:
    """Sign of a single-chord page."""
    return _single_chord(p)[2]


def split_page(p: Page) -> list[Page]:
    """Write ``p`` as a list of single-chord pages whose entrywise sum is ``p``."""
    out = []
    for r, c, v in p.entries:
        if r == c:
            if v % 2:
                raise ValueError(f"odd diagonal value {v} at ({r},{r}) is not a chord sum")
            count, unit = abs(v) // 2, (2 if v > 0 else -2)
        else:
            count, unit = abs(v), (1 if v > 0 else -1)
        out.extend(Page(p.q, p.N, ((r, c, unit),)) for _ in range(count))
    return out


def expand_books(s: BookSum) -> BookSum:
    terms = []
    for coef, book in s.terms:
        parts = [split_page(p) for p in book.pages]
        for choice in itertools.product(*parts):
            terms.append((coef, Book(s.q, s.N, choice)))
    return canonicalize(BookSum(s.q, s.N, tuple(terms)))


def booksum_from_diagrams(terms, q: int, N: int) -> BookSum:
    """Encode ``(coefficient, diagram)`` pairs termwise."""
    return canonicalize(BookSum(q, N, tuple((Coefficient.of(c), encode_diagram(d)) for c, d in terms)))


def book_tensor(s: BookSum) -> dict[tuple, Coefficient]:
    """Coefficient-weighted page tensor ``sum c * P_1 (x) ... (x) P_m``.

    Keys are tuples of upper-triangle positions, one per page.  Splitting is
    multilinear, so this data is unchanged by :func:`expand_books`.
    """
    acc: dict[tuple, Coefficient] = {}
    for coef, book in s.terms:
        for combo in itertools.product(*(p.entries for p in book.pages)):
            key = tuple((r, c) for r, c, _ in combo)
            w = coef
            for _, _, v in combo:
                w = w * v
            acc[key] = acc.get(key, Coefficient()) + w
    return {k: v for k, v in acc.items() if v}


# ---------------------------------------------------------------- JSON


def page_to_json(p: Page) -> dict:
    return {"q": p.q, "N": p.N, "e": [list(e) for e in p.entries]}


def page_from_json(obj) -> Page:
    return Page(obj["q"], obj["N"], tuple(tuple(e) for e in obj["e"]))


def booksum_to_json(s: BookSum) -> dict:
    return {"q": s.q, "N": s.N,
            "terms": [{"c": c.to_json(), "b": [page_to_json(p) for p in b.pages]} for c, b in s.terms]}


def booksum_from_json(obj) -> BookSum:
    q, N = obj["q"], obj["N"]
    terms = []
    for t in obj["terms"]:
        pages = tuple(page_from_json(p) for p in t["b"])
        terms.append((Coefficient.from_json(t["c"]), Book(q, N, pages)))
    return canonicalize(BookSum(q, N, tuple(terms)))


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def skeleton_booksum(link) -> BookSum:
    """Books of every lifted single-chord diagram the link admits.

    Distinct diagrams can share cells and so encode to the same book; those
    coefficients add up.
    """
    return booksum_from_diagrams(skeleton_diagrams(link).terms, link.q, link.layout.N)
