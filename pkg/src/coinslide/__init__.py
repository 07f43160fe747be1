"""Two-coin sliding strip game: exact values, strategy, and verification.

Library surface: the rules live in :mod:`coinslide.core`, values in
:mod:`coinslide.grundy`, the two-strap sum game in
:mod:`coinslide.sumgame`, and the claim checkers in
:mod:`coinslide.verify`.  The HTTP facade (:mod:`coinslide.service`) and
CLI (:mod:`coinslide.cli`) are imported on demand to keep plain library
use light.
"""

__version__ = "0.1.0"

from .core import (
    Empty,
    GameError,
    IllegalMoveError,
    InvalidStateError,
    One,
    ParseError,
    Push,
    RemoveLeft,
    SlideLeft,
    SlideLone,
    SlideRight,
    StrapMove,
    StrapState,
    Two,
    Variant,
    apply,
    coins,
    format_strap,
    parse_strap,
    rank,
    successors,
)
from .grundy import (
    ClassificationError,
    GrundyClass,
    classify,
    enumerate_class,
    grundy_bruteforce,
    grundy_closed_form,
)
from .sumgame import (
    NoMovesError,
    Outcome,
    Side,
    SumMove,
    SumState,
    engine_move,
    engine_selfplay,
    format_sum,
    minimax_outcome,
    nim_sum,
    outcome,
    parse_sum,
    sum_grundy,
    winning_moves,
)

__all__ = [
    "__version__",
    "Empty",
    "GameError",
    "IllegalMoveError",
    "InvalidStateError",
    "One",
    "ParseError",
    "Push",
    "RemoveLeft",
    "SlideLeft",
    "SlideLone",
    "SlideRight",
    "StrapMove",
    "StrapState",
    "Two",
    "Variant",
    "apply",
    "coins",
    "format_strap",
    "parse_strap",
    "rank",
    "successors",
    "ClassificationError",
    "GrundyClass",
    "classify",
    "enumerate_class",
    "grundy_bruteforce",
    "grundy_closed_form",
    "NoMovesError",
    "Outcome",
    "Side",
    "SumMove",
    "SumState",
    "engine_move",
    "engine_selfplay",
    "format_sum",
    "minimax_outcome",
    "nim_sum",
    "outcome",
    "parse_sum",
    "sum_grundy",
    "winning_moves",
]
