"""Computational verification of the value theory at desk-scale bounds.

Every checker compares two independently computed sides and returns a
structured VerifyReport.  Status is "fail" exactly when counterexamples
were captured; "pass-with-notes" marks documented boundary discrepancies
that do not contradict the union-level claims.

The one known note source: the explicit parameterization of the n = 6m+2
family-2 set admits t = m in its second branch "(4t+1, 6m+2t+3)" (bound
6t <= 6m+2), producing (4m+1, 8m+3), which the family-2 size condition
excludes (4m+1 + 2m+1 + 1 = 6m+3 > n) but which family 1 contains.  The
union-level comparison is therefore still exact.  The checker reports
this note verbatim rather than quietly correcting either side.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import tables
from .core import Variant
from .grundy import classify, enumerate_class

DEFAULT_VALUE_BOUND = 300
DEFAULT_MEX_BOUND = 120
DEFAULT_M_MAX = 50
DEFAULT_LEMMA_MAX_Y = 400
DEFAULT_VARIANT_BOUND = 150


@dataclass
class VerifyReport:
    claim: str
    bounds: dict[str, int]
    status: str  # "pass" | "fail" | "pass-with-notes"
    counterexamples: list[dict] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "bounds": self.bounds,
            "status": self.status,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_text(self, include_timing: bool = False) -> str:
        def record(r: dict) -> str:
            return " ".join(f"{k}={r[k]}" for k in r)

        lines = [
            f"claim: {self.claim}",
            "bounds: " + " ".join(f"{k}={v}" for k, v in self.bounds.items()),
            f"status: {self.status}",
        ]
        if self.counterexamples:
            lines.append(f"counterexamples ({len(self.counterexamples)}):")
            lines.extend("  - " + record(r) for r in self.counterexamples)
        else:
            lines.append("counterexamples: none")
        if self.notes:
            lines.append(f"notes ({len(self.notes)}):")
            lines.extend("  - " + record(r) for r in self.notes)
        else:
            lines.append("notes: none")
        if include_timing:
            lines.append(f"elapsed_ms: {self.elapsed_ms:.3f}")
        return "\n".join(lines)


def _finish(claim: str, bounds: dict[str, int], counterexamples: list[dict],
            notes: list[dict], started: float) -> VerifyReport:
    if counterexamples:
        status = "fail"
    elif notes:
        status = "pass-with-notes"
    else:
        status = "pass"
    return VerifyReport(
        claim=claim,
        bounds=bounds,
        status=status,
        counterexamples=counterexamples,
        notes=notes,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )


def _closed_form_table(bound: int) -> np.ndarray:
    """Dense closed-form values, -1 off the strict upper triangle."""
    cf = np.full((bound + 1, bound + 1), -1, dtype=np.int32)
    for x in range(bound):
        for y in range(x + 1, bound + 1):
            cf[x, y] = classify(x, y).n
    return cf


def check_theorem2(bound: int = DEFAULT_VALUE_BOUND) -> VerifyReport:
    """Brute force against closed form on every 0 <= x < y <= bound."""
    started = time.perf_counter()
    oracle = tables.two_coin_table(bound, Variant.A)
    counterexamples = []
    positions = 0
    for x in range(bound):
        for y in range(x + 1, bound + 1):
            positions += 1
            formula = classify(x, y).n
            got = int(oracle[x, y])
            if got != formula:
                counterexamples.append({"x": x, "y": y, "oracle": got, "formula": formula})
    bounds = {"max_y": bound, "positions": positions}
    return _finish("theorem-2", bounds, counterexamples, [], started)


# Explicit per-case parameterizations of the family sets.  For n = 6m + c:
# family 1 is {(a + 4m + x0, a + 8m + y0) : a >= 0} or empty; families 2/3
# are unions of branches (x0, sign, y0, slack) standing for
# {(4t + x0, 6m + sign*2t + y0) : t >= 0, 6t <= 6m + slack}.
_LEMMA1_CASES: dict[str, dict] = {
    "i": {
        "residue": 2,
        "g1": (0, 2),
        2: [(0, +1, 2, 4), (1, +1, 3, 2)],
        3: [(2, -1, 1, -1), (3, -1, 0, -3)],
    },
    "ii": {
        "residue": 5,
        "g1": (2, 6),
        2: [(2, +1, 6, 1), (3, +1, 7, -1)],
        3: [(0, -1, 5, 4), (1, -1, 4, 2)],
    },
    "iii": {
        "residue": 0,
        "g1": None,
        2: [(0, +1, 0, -1), (1, +1, 1, -3)],
        3: [(2, -1, -1, -4), (3, -1, -2, -6)],
    },
    "iv": {
        "residue": 1,
        "g1": None,
        2: [(2, +1, 2, -3), (3, +1, 3, -5)],
        3: [(0, -1, 1, 0), (1, -1, 0, -2)],
    },
    "v": {
        "residue": 3,
        "g1": None,
        2: [(2, +1, 4, -1), (3, +1, 5, -3)],
        3: [(0, -1, 3, 2), (1, -1, 2, 0)],
    },
    "vi": {
        "residue": 4,
        "g1": None,
        2: [(0, +1, 4, 3), (1, +1, 5, 1)],
        3: [(2, -1, 3, 0), (3, -1, 2, -2)],
    },
}

_CASE_ORDER = ("i", "ii", "iii", "iv", "v", "vi")


def _branch_text(branch: tuple[int, int, int, int]) -> str:
    x0, sign, y0, _ = branch
    xs = f"4t+{x0}" if x0 else "4t"
    op = "+" if sign > 0 else "-"
    ys = f"6m{op}2t{y0:+d}" if y0 else f"6m{op}2t"
    return f"({xs}, {ys})"


def _explicit_family(case: dict, m: int, family: int, max_y: int) -> dict[tuple[int, int], str]:
    """Elements of the case's explicit set, mapped to their source branch text."""
    out: dict[tuple[int, int], str] = {}
    if family == 1:
        if case["g1"] is None:
            return out
        x0, y0 = case["g1"]
        a = 0
        while a + 8 * m + y0 <= max_y:
            out.setdefault((a + 4 * m + x0, a + 8 * m + y0), "g1")
            a += 1
        return out
    for branch in case[family]:
        x0, sign, y0, slack = branch
        t = 0
        while 6 * t <= 6 * m + slack:
            x = 4 * t + x0
            y = 6 * m + sign * 2 * t + y0
            if y <= max_y:
                out.setdefault((x, y), f"{_branch_text(branch)} at t={t}")
            t += 1
    return out


def check_lemma1(m_max: int = DEFAULT_M_MAX, max_y: int = DEFAULT_LEMMA_MAX_Y) -> list[VerifyReport]:
    """Explicit per-case sets against the defining comprehensions.

    Per case: one union-level report (must pass exactly) and one report
    per family.  A family-level extra element is acceptable only when the
    size condition excludes it from that family while a sibling family
    contains it at the same n; such elements become notes, everything
    else a counterexample.
    """
    reports = []
    bounds = {"m_max": m_max, "max_y": max_y}
    for case_name in _CASE_ORDER:
        case = _LEMMA1_CASES[case_name]
        union_started = time.perf_counter()
        union_cexs: list[dict] = []
        family_data: dict[int, tuple[list[dict], list[dict]]] = {1: ([], []), 2: ([], []), 3: ([], [])}
        for m in range(m_max + 1):
            n = 6 * m + case["residue"]
            explicit = {f: _explicit_family(case, m, f, max_y) for f in (1, 2, 3)}
            defined = {
                f: set(enumerate_class(n, f, max_y)) if n >= 1 else set()
                for f in (1, 2, 3)
            }
            explicit_union = set().union(*(explicit[f] for f in (1, 2, 3)))
            defined_union = set().union(*(defined[f] for f in (1, 2, 3)))
            for el in sorted(explicit_union - defined_union):
                union_cexs.append(
                    {"m": m, "n": n, "element": list(el), "side": "explicit-only"}
                )
            for el in sorted(defined_union - explicit_union):
                union_cexs.append(
                    {"m": m, "n": n, "element": list(el), "side": "definition-only"}
                )
            for f in (1, 2, 3):
                cexs, notes = family_data[f]
                for el in sorted(set(explicit[f]) - defined[f]):
                    sibling = _sibling_cover(el, n, f)
                    if sibling is not None:
                        notes.append(
                            {
                                "case": case_name,
                                "m": m,
                                "n": n,
                                "family": f,
                                "element": list(el),
                                "branch": explicit[f][el],
                                "covered_by": sibling,
                            }
                        )
                    else:
                        cexs.append(
                            {
                                "m": m,
                                "n": n,
                                "element": list(el),
                                "side": "explicit-only",
                                "branch": explicit[f][el],
                            }
                        )
                for el in sorted(defined[f] - set(explicit[f])):
                    cexs.append(
                        {"m": m, "n": n, "element": list(el), "side": "definition-only"}
                    )
        reports.append(
            _finish(f"lemma-1.{case_name}.union", bounds, union_cexs, [], union_started)
        )
        for f in (1, 2, 3):
            cexs, notes = family_data[f]
            reports.append(
                _finish(f"lemma-1.{case_name}.G{f}", bounds, cexs, notes, union_started)
            )
    return reports


def _sibling_cover(el: tuple[int, int], n: int, family: int) -> int | None:
    """Family index covering ``el`` at value n when ``family`` itself does not."""
    x, y = el
    if x < 0 or x >= y:
        return None
    cls = classify(x, y)
    if cls.n != n or family in cls.families:
        return None
    return cls.families[0]


_LEMMA2_CASES = (
    # (case, residue, x offset of 4m, first m)
    ("i", 0, -1, 1),
    ("ii", 1, 0, 0),
    ("iii", 3, 1, 0),
    ("iv", 4, 2, 0),
)


def check_lemma2(m_max: int = DEFAULT_M_MAX) -> VerifyReport:
    """Adjacent-pair memberships (4m+k-1, 4m+k) in family 3 at n = 6m+c.

    Case (i) starts at m = 1: its m = 0 instance would be the
    non-position (-1, 0) and is skipped.
    """
    started = time.perf_counter()
    counterexamples = []
    for case_name, residue, offset, m_first in _LEMMA2_CASES:
        for m in range(m_first, m_max + 1):
            n = 6 * m + residue
            x = 4 * m + offset
            y = x + 1
            cls = classify(x, y)
            if cls.n != n or 3 not in cls.families:
                counterexamples.append(
                    {
                        "claim": f"lemma-2.{case_name}",
                        "m": m,
                        "n": n,
                        "element": [x, y],
                        "n_found": cls.n,
                        "families_found": list(cls.families),
                    }
                )
    return _finish("lemma-2", {"m_max": m_max}, counterexamples, [], started)


def check_mex_reachability(bound: int = DEFAULT_MEX_BOUND) -> VerifyReport:
    """Successor value structure of every position in range, variant A.

    Completeness: every n' < n is some successor's closed-form value
    (0 always is, via the off-board pushes).  Soundness: no successor
    keeps the value n.
    """
    started = time.perf_counter()
    cf = _closed_form_table(bound)
    diag = np.array([cf[i, i + 1] for i in range(bound)], dtype=np.int32)
    counterexamples = []
    positions = 0
    for x in range(bound):
        for y in range(x + 1, bound + 1):
            positions += 1
            n = int(cf[x, y])
            succ = np.concatenate(
                (
                    cf[:x, y],        # slide the left coin
                    cf[x, x + 1 : y], # slide the right coin
                    diag[:x],         # pushes keeping both coins
                    np.zeros(2, dtype=np.int32),  # One(0) and Empty
                )
            )
            present = np.zeros(max(n + 2, 1), dtype=bool)
            present[succ[succ < present.size]] = True
            missing = [v for v in range(n) if not present[v]]
            if missing:
                counterexamples.append({"x": x, "y": y, "n": n, "missing": missing})
            if present[n]:
                counterexamples.append({"x": x, "y": y, "n": n, "violation": "value-kept"})
    bounds = {"max_y": bound, "positions": positions}
    return _finish("mex-reach", bounds, counterexamples, [], started)


def check_n_positions(bound: int = DEFAULT_VALUE_BOUND) -> VerifyReport:
    """Every two-coin position is a next-player win (value >= 1)."""
    started = time.perf_counter()
    counterexamples = []
    positions = 0
    for x in range(bound):
        for y in range(x + 1, bound + 1):
            positions += 1
            n = classify(x, y).n
            if n < 1:
                counterexamples.append({"x": x, "y": y, "n": n})
    bounds = {"max_y": bound, "positions": positions}
    return _finish("n-positions", bounds, counterexamples, [], started)


def check_variant_equivalence(bound: int = DEFAULT_VARIANT_BOUND) -> VerifyReport:
    """Brute-force values agree under variants A and B on every pair."""
    started = time.perf_counter()
    size = bound + 1
    a = tables.two_coin_table(bound, Variant.A)[:size, :size]
    b = tables.two_coin_table(bound, Variant.B)[:size, :size]
    counterexamples = [
        {"x": int(x), "y": int(y), "variant_a": int(a[x, y]), "variant_b": int(b[x, y])}
        for x, y in np.argwhere(a != b)
    ]
    positions = size * bound // 2
    bounds = {"max_y": bound, "positions": positions}
    return _finish("variant-equivalence", bounds, counterexamples, [], started)


def run_all(
    value_bound: int = DEFAULT_VALUE_BOUND,
    mex_bound: int = DEFAULT_MEX_BOUND,
    m_max: int = DEFAULT_M_MAX,
    lemma_max_y: int = DEFAULT_LEMMA_MAX_Y,
    variant_bound: int = DEFAULT_VARIANT_BOUND,
) -> list[VerifyReport]:
    """The full suite in canonical order."""
    reports = [check_theorem2(value_bound)]
    reports.extend(check_lemma1(m_max, lemma_max_y))
    reports.append(check_lemma2(m_max))
    reports.append(check_mex_reachability(mex_bound))
    reports.append(check_n_positions(value_bound))
    reports.append(check_variant_equivalence(variant_bound))
    return reports
