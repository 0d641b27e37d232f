"""Degree-one data: the linking matrix and its behaviour under band sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .book_codec import Book, BookSum, canonicalize, encode_chord
from .diagrams import Coefficient, chord_on_link
from .link_model import MorseLink, disjoint_union


@dataclass(frozen=True)
class LinkingMatrix:
    q: int
    m: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.m)
        if len(rows) != self.q or any(len(r) != self.q for r in rows):
            raise ValueError(f"expected a {self.q}x{self.q} matrix")
        object.__setattr__(self, "m", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "LinkingMatrix":
        return cls(len(rows), tuple(tuple(r) for r in rows))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.m[i - 1][j - 1]

    def is_symmetric(self) -> bool:
        return all(self.m[a][b] == self.m[b][a] for a in range(self.q) for b in range(self.q))

    def to_json(self) -> dict:
        return {"q": self.q, "m": [[[x.numerator, x.denominator] for x in row] for row in self.m]}


def linking_matrix(link: MorseLink) -> LinkingMatrix:
    """Half the signed half-twist count between (or within) components."""
    q = link.q
    acc = [[Fraction(0)] * q for _ in range(q)]
    for index, g in link.crossing_groups():
        a, b = link.group_components(index)
        w = Fraction(g.eps * g.n, 2)
        if a == b:
            acc[a - 1][a - 1] += w
        else:
            acc[a - 1][b - 1] += w
            acc[b - 1][a - 1] += w
    return LinkingMatrix(q, tuple(tuple(r) for r in acc))


def linking_band_sum(L: LinkingMatrix, i: int, j: int, sign: str = "+") -> LinkingMatrix:
    """``M^T L M`` with ``M`` the identity plus ``+-1`` at ``(j, i)``.

    Column ``i`` gains ``s`` times column ``j``, then row ``i`` gains ``s`` times row ``j``.
    """
    if i == j:
        raise ValueError("band sum needs two distinct components")
    s = {"+": 1, "-": -1}[sign]
    m = [list(r) for r in L.m]
    a, b = i - 1, j - 1
    for r in range(L.q):
        m[r][a] += s * m[r][b]
    for c in range(L.q):
        m[a][c] += s * m[b][c]
    return LinkingMatrix(L.q, tuple(tuple(r) for r in m))


def degree1_booksum(link: MorseLink) -> BookSum:
    """One single-chord book per crossing group, read just below the group.

    Weights are ``eps*n/2`` between components and ``eps*n/4`` on a single
    component, so that :func:`block_weights` reproduces the linking matrix.
    """
    q, N = link.q, link.layout.N
    terms = []
    for index, g in link.crossing_groups():
        ch = chord_on_link(link, index - 1, g.pos, g.pos + 1)
        same = ch.a.comp == ch.b.comp
        w = Fraction(g.eps * g.n, 4 if same else 2)
        page = encode_chord(ch.a.cell, ch.b.cell, q, N)
        terms.append((Coefficient(w), Book(q, N, (page,))))
    return canonicalize(BookSum(q, N, tuple(terms)))


def block_weights(s: BookSum) -> LinkingMatrix:
    """Coefficient-weighted block sums of the degree-one pages."""
    acc = [[Fraction(0)] * s.q for _ in range(s.q)]
    for coef, book in s.terms:
        if len(book.pages) != 1:
            continue
        if coef.im:
            raise ValueError("degree-one weights must be real")
        page = book.pages[0]
        for r, c, v in page.full_entries():
            acc[(r - 1) // s.N][(c - 1) // s.N] += coef.re * v
    return LinkingMatrix(s.q, tuple(tuple(r) for r in acc))


def block_diagonal(a: LinkingMatrix, b: LinkingMatrix) -> LinkingMatrix:
    q = a.q + b.q
    rows = [[Fraction(0)] * q for _ in range(q)]
    for x in range(a.q):
        for y in range(a.q):
            rows[x][y] = a.m[x][y]
    for x in range(b.q):
        for y in range(b.q):
            rows[a.q + x][a.q + y] = b.m[x][y]
    return LinkingMatrix(q, tuple(tuple(r) for r in rows))


def cross_block_entries(s: BookSum, split: int) -> int:
    """Number of page entries joining components ``<= split`` to components ``> split``."""
    n = 0
    for _, book in s.terms:
        for p in book.pages:
            for r, c, _ in p.entries:
                if ((r - 1) // s.N < split) != ((c - 1) // s.N < split):
                    n += 1
    return n


def degree1_additivity_check(a: MorseLink, b: MorseLink) -> bool:
    u = disjoint_union(a, b)
    if linking_matrix(u) != block_diagonal(linking_matrix(a), linking_matrix(b)):
        return False
    return cross_block_entries(degree1_booksum(u), a.q) == 0
