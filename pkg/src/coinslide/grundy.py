"""Grundy values two ways: brute-force mex recursion and closed forms.

The brute force walks the actual move rules (via the table kernels) and
knows nothing about the formulas.  The closed form classifies a two-coin
position into up to three families and reads the value off directly.
The two routes are kept strictly independent so their exact agreement
(checked exhaustively in ``verify`` and the test suite) means something.

The three families, for a position x < y with a >= 0:

1. (a + 2(n-2)/3, a + 4(n-2)/3 + 2), defined when n = 2 (mod 3);
2. (a, n + floor((a+1)/2)) with a + floor((a+1)/2) + 1 <= n and
   floor(a/2) = n (mod 2);
3. (a, n - floor((a+1)/2)) with the same size condition and
   floor(a/2) = n + 1 (mod 2).

Inverting these: family 1 applies iff d = y - x is even and y <= 2x + 2,
giving n = (3d - 2)/2; family 2 proposes n = y - floor((x+1)/2); family 3
proposes n = y + floor((x+1)/2), whose size condition reduces to y >= x+1
and so always holds.  Every position lands in at least one family and all
applicable families agree on n; a violation raises ClassificationError
and is a reportable finding, not a recoverable condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import tables
from .core import Empty, GameError, InvalidStateError, One, StrapState, Two, Variant


class ClassificationError(GameError):
    """The family classification failed to be total and consistent.

    Must never fire; carries the candidate (family, n, witness) triples
    for the offending position.
    """

    def __init__(self, x: int, y: int, candidates: list[tuple[int, int, int]]):
        self.x = x
        self.y = y
        self.candidates = candidates
        if candidates:
            detail = "disagreeing candidates " + ", ".join(
                f"family {f}: n={n} (a={a})" for f, n, a in candidates
            )
        else:
            detail = "no family applies"
        super().__init__(f"classification of ({x}, {y}) failed: {detail}")


@dataclass(frozen=True)
class GrundyClass:
    """Classification of a two-coin position.

    ``families`` are the witnessing family indices in ascending order and
    ``witnesses`` the matching parameter a of each (for family 1 that is
    x - 2(n-2)/3, for families 2 and 3 just x).
    """

    n: int
    families: tuple[int, ...]
    witnesses: tuple[int, ...]


def _candidates(x: int, y: int) -> list[tuple[int, int, int]]:
    cands = []
    d = y - x
    if d % 2 == 0 and y <= 2 * x + 2:
        # n = (3d-2)/2 is integral (d even) and automatically 2 mod 3
        cands.append((1, (3 * d - 2) // 2, x - (d - 2)))
    n2 = y - (x + 1) // 2
    if x + (x + 1) // 2 + 1 <= n2 and (x // 2) % 2 == n2 % 2:
        cands.append((2, n2, x))
    n3 = y + (x + 1) // 2
    if (x // 2) % 2 == (n3 + 1) % 2:
        cands.append((3, n3, x))
    return cands


@lru_cache(maxsize=65536)
def classify(x: int, y: int) -> GrundyClass:
    """Classify the position (x, y), x < y, into its witnessing families."""
    if x < 0 or x >= y:
        raise InvalidStateError(f"need 0 <= x < y, got ({x}, {y})")
    cands = _candidates(x, y)
    if not cands:
        raise ClassificationError(x, y, cands)
    values = {n for _, n, _ in cands}
    if len(values) != 1:
        raise ClassificationError(x, y, cands)
    return GrundyClass(
        n=values.pop(),
        families=tuple(f for f, _, _ in cands),
        witnesses=tuple(a for _, _, a in cands),
    )


def grundy_closed_form(state: StrapState, variant: Variant = Variant.A) -> int:
    """Value by formula: Two via classify; One(r) is r when mobile, else 0."""
    match state:
        case Empty():
            return 0
        case One(square=r):
            return r if variant is Variant.A else 0
        case Two(x=x, y=y):
            return classify(x, y).n
    raise TypeError(f"not a strap state: {state!r}")


def grundy_bruteforce(state: StrapState, variant: Variant = Variant.A) -> int:
    """Value by memoized mex recursion over the actual rules (the oracle)."""
    match state:
        case Empty():
            return 0
        case One(square=r):
            return int(tables.one_coin_values(r + 1, variant)[r])
        case Two(x=x, y=y):
            return int(tables.two_coin_table(y, variant)[x, y])
    raise TypeError(f"not a strap state: {state!r}")


def enumerate_class(n: int, family: int, bound: int) -> list[tuple[int, int]]:
    """Members (x, y) of family ``family`` at value ``n`` with y <= bound.

    Generated directly from the defining comprehension (iterate the
    parameter a and apply the side conditions), ascending by (x, y).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    out: list[tuple[int, int]] = []
    if family == 1:
        if n % 3 != 2:
            return out
        dx = 2 * (n - 2) // 3
        a = 0
        while a + 2 * dx + 2 <= bound:
            out.append((a + dx, a + 2 * dx + 2))
            a += 1
        return out
    if family == 2:
        a = 0
        while True:
            half = (a + 1) // 2
            if a + half + 1 > n:
                return out
            y = n + half
            if y > bound:
                return out
            if (a // 2) % 2 == n % 2:
                out.append((a, y))
            a += 1
    if family == 3:
        a = 0
        while True:
            half = (a + 1) // 2
            if a + half + 1 > n:
                return out
            y = n - half
            if y <= bound and (a // 2) % 2 == (n + 1) % 2:
                out.append((a, y))
            a += 1
    raise ValueError(f"family must be 1, 2, or 3, got {family}")
