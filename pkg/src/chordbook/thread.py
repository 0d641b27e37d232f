"""The thread: adjoin an unlinked circle on the left, one stage at a time.

A trivial circle adds four strips in front of every block, so a sum over
``q`` components and ``N`` strips becomes one over ``q + 1`` and ``N + 4``.
The new circle gets the last block, which stays empty.
"""

from __future__ import annotations

from .book_codec import Book, BookSum, Page, canonicalize

CIRCLE_STRIPS = 4


def thread_embed(s: BookSum) -> BookSum:
    q, N = s.q, s.N
    q2, N2 = q + 1, N + CIRCLE_STRIPS

    def move(k: int) -> int:
        comp, strip = divmod(k - 1, N)
        return comp * N2 + strip + 1 + CIRCLE_STRIPS

    terms = []
    for c, b in s.terms:
        pages = tuple(Page(q2, N2, tuple((move(r), move(cc), v) for r, cc, v in p.entries)) for p in b.pages)
        terms.append((c, Book(q2, N2, pages)))
    return canonicalize(BookSum(q2, N2, tuple(terms)))


def thread(s: BookSum, steps: int) -> BookSum:
    for _ in range(steps):
        s = thread_embed(s)
    return s


def stage_sizes(q: int, N: int, stages: int) -> list[int]:
    return [(q + m) * (N + CIRCLE_STRIPS * m) for m in range(stages + 1)]


def _touched(s: BookSum) -> set[int]:
    """Flat row indices (1-based) that carry an entry in some page."""
    out = set()
    for _, b in s.terms:
        for p in b.pages:
            for r, c, _ in p.entries:
                out.add(r)
                out.add(c)
    return out


def infer_components(s: BookSum, steps: int) -> int:
    """Number of live components of the link under ``steps`` threading stages.

    Every factorisation ``R = (q0 + steps) * (N0 + 4 * steps)`` of the ambient
    size is tried; one is consistent when the ``steps`` trailing blocks are
    empty and the leading ``4 * steps`` strips of every block are empty.  The
    declared shape wins when it is consistent; otherwise all consistent
    shapes must agree.
    """
    R = s.q * s.N
    touched = _touched(s)
    if not touched:
        raise ValueError("an all-zero sum does not determine the component count")
    pad = CIRCLE_STRIPS * steps
    candidates = []
    for Q in range(steps + 1, R + 1):
        if R % Q:
            continue
        M = R // Q
        if M <= pad:
            continue
        blocks = {(k - 1) // M for k in touched}
        if any(b >= Q - steps for b in blocks):
            continue
        if any((k - 1) % M < pad for k in touched):
            continue
        candidates.append((Q, M, len(blocks)))
    if not candidates:
        raise ValueError(f"no consistent (q, N) for size {R} at {steps} stages")
    for Q, M, live in candidates:
        if (Q, M) == (s.q, s.N):
            return live
    counts = {live for _, _, live in candidates}
    if len(counts) == 1:
        return counts.pop()
    raise ValueError(f"ambiguous thread shapes {candidates} for size {R}")
