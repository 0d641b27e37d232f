"""Move matrices acting on books by page-wise congruence ``M^T A M``."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .book_codec import Book, BookSum, Page, canonicalize, encode_diagram, expand_books
from .diagrams import TangleChordDiagram, lift_chords


class DimensionError(ValueError):
    """Matrix and page sizes do not fit together, or a move is out of bounds."""


class NeedleStripWarning(UserWarning):
    """A needle-slide congruence dropped entries sitting on the needle strips."""


@dataclass(frozen=True)
class TransformMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]
    q: Optional[int] = None
    n_in: Optional[int] = None
    n_out: Optional[int] = None

    def __post_init__(self):
        clean = {}
        for r, c, v in self.entries:
            if not (1 <= r <= self.rows and 1 <= c <= self.cols):
                raise DimensionError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
            clean[(r, c)] = clean.get((r, c), 0) + v
        object.__setattr__(
            self, "entries", tuple(sorted((r, c, v) for (r, c), v in clean.items() if v))
        )
        if self.q is not None:
            if self.rows != self.q * self.n_in or self.cols != self.q * self.n_out:
                raise DimensionError("block metadata inconsistent with matrix size")
        row_map: dict[int, list[tuple[int, int]]] = {}
        for r, c, v in self.entries:
            row_map.setdefault(r, []).append((c, v))
        object.__setattr__(self, "_rows", row_map)

    def row(self, r: int) -> list[tuple[int, int]]:
        return self._rows.get(r, [])  # type: ignore[attr-defined]

    def to_dense(self) -> list[list[int]]:
        m = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            m[r - 1][c - 1] = v
        return m

    def __matmul__(self, other: "TransformMatrix") -> "TransformMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        acc: dict[tuple[int, int], int] = {}
        for r, k, v in self.entries:
            for c, w in other.row(k):
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        meta = {}
        if self.q is not None and self.q == other.q:
            meta = dict(q=self.q, n_in=self.n_in, n_out=other.n_out)
        return TransformMatrix(self.rows, other.cols, tuple((r, c, v) for (r, c), v in acc.items()), **meta)

    def transpose(self) -> "TransformMatrix":
        meta = {}
        if self.q is not None:
            meta = dict(q=self.q, n_in=self.n_out, n_out=self.n_in)
        return TransformMatrix(self.cols, self.rows, tuple((c, r, v) for r, c, v in self.entries), **meta)


def identity(n: int) -> TransformMatrix:
    return TransformMatrix(n, n, tuple((k, k, 1) for k in range(1, n + 1)))


def block_diag(m: TransformMatrix, q: int) -> TransformMatrix:
    """``diag(m, ..., m)`` with ``q`` copies, tagged with block metadata."""
    ents = []
    for s in range(q):
        ents.extend((s * m.rows + r, s * m.cols + c, v) for r, c, v in m.entries)
    return TransformMatrix(q * m.rows, q * m.cols, tuple(ents), q=q, n_in=m.rows, n_out=m.cols)


def _with_block(q: int, N: int, comp: int, block: list[tuple[int, int, int]]) -> TransformMatrix:
    """Identity except the ``(comp, comp)`` block, given in local strip indices."""
    if not 1 <= comp <= q:
        raise DimensionError(f"component {comp} outside 1..{q}")
    off = (comp - 1) * N
    ents = [(k, k, 1) for k in range(1, q * N + 1) if not off < k <= off + N]
    ents.extend((off + r, off + c, v) for r, c, v in block)
    return TransformMatrix(q * N, q * N, tuple(ents), q=q, n_in=N, n_out=N)


# ---------------------------------------------------------------- congruence


def congruence(M: TransformMatrix, p: Page) -> Page:
    if M.rows != p.dim:
        raise DimensionError(f"matrix has {M.rows} rows, page is {p.dim}x{p.dim}")
    q = p.q if M.q is None else M.q
    if M.cols % q:
        raise DimensionError(f"{M.cols} columns do not split into {q} blocks")
    acc: dict[tuple[int, int], int] = {}
    for a, b, v in p.full_entries():
        for c, m1 in M.row(a):
            for d, m2 in M.row(b):
                if c <= d:
                    acc[(c, d)] = acc.get((c, d), 0) + v * m1 * m2
    return Page.from_dict(q, M.cols // q, acc)


def apply_matrix(s: BookSum, M: TransformMatrix, expand: bool = True) -> BookSum:
    """Congruence every page of every book by ``M``; coefficients are untouched."""
    if M.rows != s.q * s.N:
        raise DimensionError(f"matrix has {M.rows} rows, sum is over {s.q}x{s.N}")
    q = s.q if M.q is None else M.q
    N_out = M.cols // q
    terms = tuple(
        (c, Book(q, N_out, tuple(congruence(M, p) for p in b.pages))) for c, b in s.terms
    )
    out = BookSum(q, N_out, terms)
    return expand_books(out) if expand else canonicalize(out)


# ---------------------------------------------------------------- band sums


def band_sum_matrix(i: int, j: int, q: int, N: int) -> TransformMatrix:
    if i == j:
        raise DimensionError("band sum needs two distinct components")
    for k in (i, j):
        if not 1 <= k <= q:
            raise DimensionError(f"component {k} outside 1..{q}")
    ents = [(k, k, 1) for k in range(1, q * N + 1)]
    ents.extend(((j - 1) * N + n, (i - 1) * N + n, 1) for n in range(1, N + 1))
    return TransformMatrix(q * N, q * N, tuple(ents), q=q, n_in=N, n_out=N)


def band_sum_apply(s: BookSum, i: int, j: int) -> BookSum:
    return apply_matrix(s, band_sum_matrix(i, j, s.q, s.N))


def orientation_matrix(r: int, q: int, N: int) -> TransformMatrix:
    return _with_block(q, N, r, [(k, k, -1) for k in range(1, N + 1)])


def orientation_flip(s: BookSum, r: int) -> BookSum:
    return apply_matrix(s, orientation_matrix(r, s.q, s.N), expand=False)


def band_sum_subtract(s: BookSum, i: int, j: int) -> BookSum:
    """Band sum with the reversed orientation of ``j``: flip ``j``, slide, flip back."""
    return orientation_flip(band_sum_apply(orientation_flip(s, j), i, j), j)


# ---------------------------------------------------------------- Reidemeister


HUMP = 8


def d_pi_1_matrix(variant: str, n: int, N: int) -> TransformMatrix:
    """Single-block matrix for the hump moves; the hump sits on strips ``n+1..n+8``.

    ``hump_to_strand`` is ``N x (N-8)``, ``strand_to_hump`` is ``N x (N+8)`` and
    ``hump_to_hump`` is ``N x N``; lift with :func:`block_diag` for several components.
    """
    if n < 0:
        raise DimensionError("hump offset must be non-negative")
    if variant == "hump_to_strand":
        if n + HUMP > N:
            raise DimensionError(f"hump at {n + 1}..{n + HUMP} does not fit in {N} strips")
        ents = [(k, k, 1) for k in range(1, n + 1)]
        ents += [(k, k - HUMP, 1) for k in range(n + HUMP + 1, N + 1)]
        return TransformMatrix(N, N - HUMP, tuple(ents))
    if variant == "strand_to_hump":
        if n > N:
            raise DimensionError(f"offset {n} beyond {N} strips")
        ents = [(k, k, 1) for k in range(1, n + 1)]
        ents += [(k, k + HUMP, 1) for k in range(n + 1, N + 1)]
        return TransformMatrix(N, N + HUMP, tuple(ents))
    if variant == "hump_to_hump":
        if n + HUMP > N:
            raise DimensionError(f"hump at {n + 1}..{n + HUMP} does not fit in {N} strips")
        ents = [(k, k, 1) for k in range(1, N + 1) if not n < k <= n + HUMP]
        return TransformMatrix(N, N, tuple(ents))
    raise ValueError(f"unknown variant {variant!r}")


def d_pi_2_matrix(n: int, N: int, q: int, t: int) -> TransformMatrix:
    """Needle slide on component ``t``: swap strips ``n`` and ``n+3``, kill ``n+1, n+2``."""
    if n < 1 or n + 3 > N:
        raise DimensionError(f"strips {n}..{n + 3} not inside 1..{N}")
    block = [(k, k, 1) for k in range(1, N + 1) if not n <= k <= n + 3]
    block += [(n, n + 3, 1), (n + 3, n, 1)]
    return _with_block(q, N, t, block)


def needle_cells(n: int, N: int, t: int) -> set[int]:
    off = (t - 1) * N
    return {off + n + 1, off + n + 2}


def d_pi_2_apply(s: BookSum, n: int, t: int) -> BookSum:
    M = d_pi_2_matrix(n, s.N, s.q, t)
    dead = needle_cells(n, s.N, t)
    lost = sum(1 for _, b in s.terms for p in b.pages for r, c, _ in p.entries if r in dead or c in dead)
    if lost:
        warnings.warn(f"{lost} page entries on needle strips {n + 1},{n + 2} were dropped",
                      NeedleStripWarning, stacklevel=2)
    return apply_matrix(s, M)


OMEGA1F = 10


def omega_1f_matrix(n: int, N: int, q: int, l: int) -> TransformMatrix:
    """Reverse strips ``n..n+9`` of component ``l``."""
    if n < 1 or n + OMEGA1F - 1 > N:
        raise DimensionError(f"strips {n}..{n + OMEGA1F - 1} not inside 1..{N}")
    block = [(k, k, 1) for k in range(1, N + 1) if not n <= k < n + OMEGA1F]
    block += [(n + a, n + OMEGA1F - 1 - a, 1) for a in range(OMEGA1F)]
    return _with_block(q, N, l, block)


def strip_matrix(kind: str, n: int, N: int) -> TransformMatrix:
    """Insert a strip after strip ``n`` (``add``) or remove strip ``n`` (``delete``)."""
    if kind == "add":
        if not 0 <= n <= N:
            raise DimensionError(f"insertion point {n} outside 0..{N}")
        ents = [(k, k if k <= n else k + 1, 1) for k in range(1, N + 1)]
        return TransformMatrix(N, N + 1, tuple(ents))
    if kind == "delete":
        if not 1 <= n <= N or N < 2:
            raise DimensionError(f"strip {n} outside 1..{N}")
        ents = [(k, k if k < n else k - 1, 1) for k in range(1, N + 1) if k != n]
        return TransformMatrix(N, N - 1, tuple(ents))
    raise ValueError(f"unknown strip move {kind!r}")


def omega_2_3_invariance_check(left: TangleChordDiagram, right: TangleChordDiagram) -> bool:
    return encode_diagram(lift_chords(left)) == encode_diagram(lift_chords(right))
