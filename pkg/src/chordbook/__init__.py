"""Book notation for tangle chord diagrams on framed links.

Links are cut into vertical strips, chords become symmetric block-matrix
pages, and band sums, Reidemeister moves and orientation changes act on
stacks of pages by matrix congruence.
"""

from .book_codec import (
    Book,
    BookSum,
    MultiChordPage,
    Page,
    decode_book,
    encode_chord,
    encode_diagram,
    expand_books,
    split_page,
)
from .diagrams import Coefficient, DiagramSum, TangleChordDiagram, lift_chords, sum_canonicalize
from .link_model import (
    HookedLink,
    LinkSyntaxError,
    LinkValidationError,
    MorseLink,
    StripLayout,
    mark_hooks,
    parse_morse_link,
    slice_strips,
    trace_components,
)
from .moves import DimensionError, TransformMatrix, band_sum_apply, congruence, orientation_flip

__version__ = "0.1.0"
