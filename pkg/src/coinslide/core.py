"""Single-strap state, legality, and move generation.

A strap is a semi-infinite row of squares numbered 0, 1, 2, ... holding at
most two coins on distinct squares.  Coins only ever travel toward lower
squares.  With two coins on the board the legal actions are:

* slide the left coin to any lower square;
* slide the right coin to any lower square strictly above the left coin
  (it can never land on or jump over the left coin);
* push: the right coin sweeps left into the left coin and shoves it, so
  both coins shift down together.  A push of depth ``j`` from ``Two(x, y)``
  gives ``Two(x-j, x-j+1)`` while both coins stay on the board; depth
  ``x+1`` drives the left coin over the edge (the right coin stops on
  square 0) and depth ``x+2`` drives both coins off.  Deeper pushes are
  not distinct moves.

A coin pushed over the edge is out of the game for good.  How removal
interacts with a lone coin is governed by :class:`Variant`:

* ``Variant.A`` (canonical): coins leave the board only via the push; the
  surviving lone coin keeps sliding down and ``One(0)`` is terminal.
* ``Variant.B``: the left coin of a pair may also be removed outright,
  but lone coins are frozen (every one-coin strap is terminal).

Both variants produce identical values for two-coin straps (the
verification suite checks this), so the distinction is unobservable in
four-coin play.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class GameError(Exception):
    """Base class for rule and input errors."""


class InvalidStateError(GameError):
    """A strap state that violates the board invariants."""


class ParseError(GameError):
    """Malformed textual strap or position notation."""


class IllegalMoveError(GameError):
    """A move rejected by the rules; ``code`` is a stable machine-readable reason."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class Variant(Enum):
    """Edge-removal rule variant (see module docstring)."""

    A = "A"  # push-only removal, lone coins slide
    B = "B"  # standalone left-coin removal, lone coins frozen


@dataclass(frozen=True)
class Empty:
    """No coins left; terminal."""

    def __repr__(self) -> str:
        return "Empty()"


@dataclass(frozen=True)
class One:
    """A single coin on ``square``."""

    square: int

    def __post_init__(self):
        if self.square < 0:
            raise InvalidStateError(f"square must be nonnegative, got {self.square}")


@dataclass(frozen=True)
class Two:
    """Two coins: left coin on ``x``, right coin on ``y``, with ``x < y``."""

    x: int
    y: int

    def __post_init__(self):
        if self.x < 0:
            raise InvalidStateError(f"squares must be nonnegative, got {self.x}")
        if self.x >= self.y:
            raise InvalidStateError(
                f"coins must sit on distinct squares in ascending order, got ({self.x}, {self.y})"
            )


StrapState = Empty | One | Two


@dataclass(frozen=True)
class SlideLeft:
    """Slide the left coin of a pair to square ``to``."""

    to: int


@dataclass(frozen=True)
class SlideRight:
    """Slide the right coin of a pair to square ``to``."""

    to: int


@dataclass(frozen=True)
class SlideLone:
    """Slide a lone coin to square ``to`` (variant A only)."""

    to: int


@dataclass(frozen=True)
class Push:
    """Sweep the right coin into the left one and shove both down ``depth`` squares."""

    depth: int


@dataclass(frozen=True)
class RemoveLeft:
    """Remove the left coin of a pair outright (variant B only)."""


StrapMove = SlideLeft | SlideRight | SlideLone | Push | RemoveLeft


def successors(state: StrapState, variant: Variant = Variant.A) -> list[tuple[StrapMove, StrapState]]:
    """All legal (move, resulting state) pairs, in a fixed deterministic order.

    Order: left-coin slides by ascending target, right-coin slides by
    ascending target, pushes by ascending depth, then (variant B) the
    outright removal.  Distinct moves always produce distinct states.
    """
    match state:
        case Empty():
            return []
        case One(square=r):
            if variant is Variant.B:
                return []
            return [(SlideLone(to), One(to)) for to in range(r)]
        case Two(x=x, y=y):
            out: list[tuple[StrapMove, StrapState]] = []
            for to in range(x):
                out.append((SlideLeft(to), Two(to, y)))
            for to in range(x + 1, y):
                out.append((SlideRight(to), Two(x, to)))
            for j in range(1, x + 1):
                out.append((Push(j), Two(x - j, x - j + 1)))
            out.append((Push(x + 1), One(0)))
            out.append((Push(x + 2), Empty()))
            if variant is Variant.B:
                out.append((RemoveLeft(), One(y)))
            return out
    raise TypeError(f"not a strap state: {state!r}")


def apply(state: StrapState, move: StrapMove, variant: Variant = Variant.A) -> StrapState:
    """Apply ``move`` to ``state``, or raise :class:`IllegalMoveError`.

    Accepts exactly the moves :func:`successors` generates and returns the
    same resulting state.
    """
    match (state, move):
        case (Two(x=x, y=y), SlideLeft(to=to)):
            if not 0 <= to < x:
                raise IllegalMoveError(
                    "out-of-range-target",
                    f"left coin on {x} can only slide to a lower square, got {to}",
                )
            return Two(to, y)
        case (Two(x=x, y=y), SlideRight(to=to)):
            if not 0 <= to < y:
                raise IllegalMoveError(
                    "out-of-range-target",
                    f"right coin on {y} can only slide to lower squares, got {to}",
                )
            if to <= x:
                raise IllegalMoveError(
                    "target-occupied-or-jump",
                    f"right coin cannot land on or pass the left coin (square {x})",
                )
            return Two(x, to)
        case (Two(x=x), Push(depth=depth)):
            if depth < 1:
                raise IllegalMoveError("push-too-shallow", "push depth must be at least 1")
            if depth > x + 2:
                raise IllegalMoveError(
                    "push-too-deep",
                    f"push depth beyond {x + 2} is not a distinct move from Two({x}, _)",
                )
            if depth <= x:
                return Two(x - depth, x - depth + 1)
            if depth == x + 1:
                return One(0)
            return Empty()
        case (Two(y=y), RemoveLeft()):
            if variant is not Variant.B:
                raise IllegalMoveError(
                    "wrong-variant", "outright removal of the left coin needs variant B"
                )
            return One(y)
        case (One(square=r), SlideLone(to=to)):
            if variant is Variant.B:
                raise IllegalMoveError("wrong-variant", "lone coins are frozen under variant B")
            if not 0 <= to < r:
                raise IllegalMoveError(
                    "out-of-range-target",
                    f"lone coin on {r} can only slide to a lower square, got {to}",
                )
            return One(to)
        case _:
            raise IllegalMoveError(
                "wrong-move-kind",
                f"{type(move).__name__} does not apply to {state!r}",
            )


def coins(state: StrapState) -> tuple[int, ...]:
    """Occupied squares in ascending order."""
    match state:
        case Empty():
            return ()
        case One(square=r):
            return (r,)
        case Two(x=x, y=y):
            return (x, y)
    raise TypeError(f"not a strap state: {state!r}")


def rank(state: StrapState) -> int:
    """Termination witness: strictly decreases under every legal move.

    ``rank(Two(x, y)) == x + y + 2``, ``rank(One(r)) == r + 1``,
    ``rank(Empty()) == 0``.
    """
    return sum(square + 1 for square in coins(state))


def parse_strap(text: str) -> StrapState:
    """Parse strap notation: ``"x,y"`` two coins, ``"r"`` one coin, ``"-"`` empty.

    Whitespace is ignored; two-coin coordinates are normalized to ascending
    order.
    """
    compact = "".join(text.split())
    if compact == "-":
        return Empty()
    if not compact:
        raise ParseError("empty strap notation (use '-' for an empty strap)")
    parts = compact.split(",")
    if len(parts) > 2:
        raise ParseError(f"at most two coins per strap, got {text!r}")
    try:
        squares = [int(p, 10) for p in parts]
    except ValueError:
        raise ParseError(f"strap coordinates must be decimal integers, got {text!r}") from None
    if any(s < 0 for s in squares):
        raise ParseError(f"strap coordinates must be nonnegative, got {text!r}")
    if len(squares) == 1:
        return One(squares[0])
    lo, hi = sorted(squares)
    if lo == hi:
        raise ParseError(f"coins must occupy distinct squares, got {text!r}")
    return Two(lo, hi)


def format_strap(state: StrapState) -> str:
    """Inverse of :func:`parse_strap` on canonical states."""
    squares = coins(state)
    if not squares:
        return "-"
    return ",".join(str(s) for s in squares)
