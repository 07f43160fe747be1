"""Disjunctive sum of two straps: valuation, strategy, and a minimax oracle.

A turn is a move on exactly one strap; the player with no move loses.
The sum's value is the nim-sum (XOR) of the strap values, a position is
a previous-player win exactly when that is 0, and a winning move is one
whose resulting nim-sum is 0.  Strap values are not monotone under moves
(a strap of value 2 can move to one of value 3), so the winning-move
search scans every successor rather than only value-reducing ones.

``minimax_outcome`` is an independent oracle: a full memoized game-tree
evaluation that never looks at values.  It is meant for desk-scale
cross-validation of the nim-sum classification.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce

from . import core
from .core import Empty, GameError, One, ParseError, StrapMove, StrapState, Two, Variant
from .grundy import grundy_closed_form


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class Outcome(Enum):
    P = "P"  # previous player wins (the player to move loses)
    N = "N"  # next player wins


@dataclass(frozen=True)
class SumState:
    left: StrapState
    right: StrapState


@dataclass(frozen=True)
class SumMove:
    side: Side
    move: StrapMove


class NoMovesError(GameError):
    """Raised when an engine move is requested but the game is over."""


def nim_sum(*values: int) -> int:
    """Bitwise XOR; 0 for the empty sum."""
    return reduce(lambda a, b: a ^ b, values, 0)


def sum_grundy(state: SumState, variant: Variant = Variant.A) -> int:
    return nim_sum(
        grundy_closed_form(state.left, variant),
        grundy_closed_form(state.right, variant),
    )


def outcome(state: SumState, variant: Variant = Variant.A) -> Outcome:
    return Outcome.P if sum_grundy(state, variant) == 0 else Outcome.N


def successors(state: SumState, variant: Variant = Variant.A) -> list[tuple[SumMove, SumState]]:
    """All legal sum moves, left strap first, each strap in core order."""
    out = []
    for move, result in core.successors(state.left, variant):
        out.append((SumMove(Side.LEFT, move), SumState(result, state.right)))
    for move, result in core.successors(state.right, variant):
        out.append((SumMove(Side.RIGHT, move), SumState(state.left, result)))
    return out


def winning_moves(state: SumState, variant: Variant = Variant.A) -> list[tuple[SumMove, SumState]]:
    """Moves to nim-sum 0, in successor order; empty iff P-position or terminal."""
    return [
        (move, result)
        for move, result in successors(state, variant)
        if sum_grundy(result, variant) == 0
    ]


@lru_cache(maxsize=None)
def _minimax(state: SumState, variant: Variant) -> Outcome:
    for _, result in successors(state, variant):
        if _minimax(result, variant) is Outcome.P:
            return Outcome.N
    return Outcome.P


def minimax_outcome(state: SumState, variant: Variant = Variant.A) -> Outcome:
    """Game-tree oracle, independent of all value theory.  Desk scale only."""
    return _minimax(state, variant)


def total_rank(state: SumState) -> int:
    return core.rank(state.left) + core.rank(state.right)


def _strap_key(state: StrapState) -> tuple[int, ...]:
    match state:
        case Empty():
            return (0,)
        case One(square=r):
            return (1, r)
        case Two(x=x, y=y):
            return (2, x, y)
    raise TypeError(f"not a strap state: {state!r}")


def _tie_break(entry: tuple[SumMove, SumState]) -> tuple:
    move, result = entry
    side_order = 0 if move.side is Side.LEFT else 1
    return (side_order, _strap_key(result.left), _strap_key(result.right))


def engine_move(state: SumState, variant: Variant = Variant.A) -> tuple[SumMove, SumState]:
    """Deterministic engine policy.

    Winning: the winning move with the lowest resulting total rank (ends
    the game fastest), ties broken left strap first, then lexicographic
    by resulting state.  Losing (P-position): the rank-maximizing move
    under the same tie-break, to prolong the game and leave the opponent
    the most room to go wrong.
    """
    succ = successors(state, variant)
    if not succ:
        raise NoMovesError("no legal moves: the game is over")
    wins = [e for e in succ if sum_grundy(e[1], variant) == 0]
    if wins:
        return min(wins, key=lambda e: (total_rank(e[1]),) + _tie_break(e))
    return min(succ, key=lambda e: (-total_rank(e[1]),) + _tie_break(e))


def engine_selfplay(start: SumState, variant: Variant = Variant.A) -> str:
    """Both sides play ``engine_move`` to the end; returns "first" or "second".

    The winner is the player who makes the last move.  Terminates because
    every move strictly decreases total rank.
    """
    state = start
    moves_made = 0
    while successors(state, variant):
        _, state = engine_move(state, variant)
        moves_made += 1
    return "first" if moves_made % 2 == 1 else "second"


def random_strap(rng: random.Random, bound: int, two_coins_only: bool = False) -> StrapState:
    """Uniform draw over canonical straps with coordinates <= bound."""
    if two_coins_only and bound < 1:
        raise ValueError("no two-coin strap fits under bound 0")
    if not two_coins_only:
        pairs = (bound + 1) * bound // 2
        pick = rng.randrange(1 + (bound + 1) + pairs)
        if pick == 0:
            return Empty()
        if pick <= bound + 1:
            return One(pick - 1)
    x, y = sorted(rng.sample(range(bound + 1), 2))
    return Two(x, y)


def random_sum_state(rng: random.Random, bound: int, two_coins_only: bool = False) -> SumState:
    return SumState(
        random_strap(rng, bound, two_coins_only),
        random_strap(rng, bound, two_coins_only),
    )


def parse_sum(text: str) -> SumState:
    """Parse "<strap>|<strap>" notation, e.g. "0,1|1,2" or "-|0,3"."""
    parts = text.split("|")
    if len(parts) != 2:
        raise ParseError(f"a position is two straps joined by '|', got {text!r}")
    return SumState(core.parse_strap(parts[0]), core.parse_strap(parts[1]))


def format_sum(state: SumState) -> str:
    return f"{core.format_strap(state.left)}|{core.format_strap(state.right)}"
