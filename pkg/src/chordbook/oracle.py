"""Moves computed directly on diagrams, as ground truth for the matrix side."""

from __future__ import annotations

import itertools
from dataclasses import replace

from .book_codec import Book, BookSum, canonicalize, encode_chord
from .diagrams import Chord, DiagramSum, TangleChordDiagram, sum_canonicalize


def _feet_on(d: TangleChordDiagram, comp: int) -> int:
    return sum(f.comp == comp for c in d.chords for f in c.feet)


def oracle_band_sum(s: DiagramSum, i: int, j: int) -> DiagramSum:
    """Double component ``j`` along ``i``: every foot on ``j`` also lands on ``i``."""
    terms = []
    for coef, d in s.terms:
        options = []
        for c in d.chords:
            feet_opts = []
            for f in c.feet:
                if f.comp == j:
                    feet_opts.append((f, replace(f, comp=i)))
                else:
                    feet_opts.append((f,))
            options.append([Chord(c.height, a, b) for a, b in itertools.product(*feet_opts)])
        for chords in itertools.product(*options):
            terms.append((coef, d.with_chords(chords)))
    return sum_canonicalize(DiagramSum(tuple(terms)))


def oracle_flip(s: DiagramSum, r: int) -> DiagramSum:
    terms = []
    for coef, d in s.terms:
        sign = -1 if _feet_on(d, r) % 2 else 1
        terms.append((coef * sign, replace(d, flipped=d.flipped ^ {r})))
    return sum_canonicalize(DiagramSum(tuple(terms)))


def booksum_of(s: DiagramSum, q: int | None = None, N: int | None = None) -> BookSum:
    """Encode termwise.

    On reversed components the diagram side keeps signs in coefficients while
    the matrix side keeps them in page entries; each chord's sign is moved
    into its page here so the two sides can be compared directly.
    """
    if s.terms:
        q, N = s.terms[0][1].q, s.terms[0][1].N
    elif q is None or N is None:
        raise ValueError("an empty diagram sum needs an explicit size")
    terms = []
    for coef, d in s.terms:
        pages = []
        total = 1
        for c in d.chords:
            sign = (-1) ** sum(f.comp in d.flipped for f in c.feet)
            total *= sign
            pages.append(encode_chord(c.a.cell, c.b.cell, d.q, d.N, sign=sign))
        terms.append((coef * total, Book(q, N, tuple(pages))))
    return canonicalize(BookSum(q, N, tuple(terms)))
