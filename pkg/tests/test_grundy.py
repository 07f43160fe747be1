import pytest
from hypothesis import given, strategies as st

from coinslide.core import Empty, InvalidStateError, One, Two, Variant
from coinslide.grundy import (
    GrundyClass,
    classify,
    enumerate_class,
    grundy_bruteforce,
    grundy_closed_form,
)

# value and witnessing families, frozen from hand evaluation of the
# defining conditions and spot-confirmed by the brute-force oracle
CLASSIFY_BANK = {
    (0, 1): (1, (3,)),
    (1, 2): (3, (3,)),
    (1, 3): (2, (1,)),
    (0, 2): (2, (1, 2)),
    (5, 7): (2, (1,)),
    (2, 6): (5, (1, 2)),
    (0, 9): (9, (3,)),
    (4, 10): (8, (1, 2)),
    (3, 9): (7, (2,)),
    (2, 4): (2, (1,)),
    (0, 4): (4, (2,)),
    (1, 4): (5, (3,)),
    (2, 5): (6, (3,)),
    (0, 5): (5, (3,)),
    (1, 5): (4, (2,)),
    (2, 3): (4, (3,)),
    (3, 4): (6, (3,)),
    (0, 6): (6, (2,)),
    (1, 7): (6, (2,)),
    (0, 3): (3, (3,)),
}


def test_classify_bank():
    for (x, y), (n, families) in CLASSIFY_BANK.items():
        cls = classify(x, y)
        assert (cls.n, cls.families) == (n, families), (x, y, cls)


def test_classify_witnesses():
    # family 1 witness is a = x - (d - 2); families 2 and 3 use a = x
    assert classify(0, 2) == GrundyClass(2, (1, 2), (0, 0))
    assert classify(5, 7) == GrundyClass(2, (1,), (5,))
    assert classify(4, 10) == GrundyClass(8, (1, 2), (0, 4))
    assert classify(1, 2) == GrundyClass(3, (3,), (1,))


def test_classify_rejects_bad_positions():
    with pytest.raises(InvalidStateError):
        classify(2, 2)
    with pytest.raises(InvalidStateError):
        classify(3, 1)
    with pytest.raises(InvalidStateError):
        classify(-1, 2)


def test_closed_form_non_two_states():
    assert grundy_closed_form(Empty()) == 0
    assert grundy_closed_form(One(0)) == 0
    assert grundy_closed_form(One(5)) == 5
    assert grundy_closed_form(One(5), Variant.B) == 0
    assert grundy_closed_form(Two(4, 10)) == 8


def test_bruteforce_examples():
    assert grundy_bruteforce(Empty()) == 0
    assert grundy_bruteforce(One(0)) == 0
    assert grundy_bruteforce(Two(0, 1)) == 1
    assert grundy_bruteforce(Two(1, 2)) == 3
    assert grundy_bruteforce(Two(3, 9)) == 7
    assert grundy_bruteforce(One(7)) == 7
    assert grundy_bruteforce(One(7), Variant.B) == 0


def test_enumerate_class_examples():
    assert enumerate_class(2, 1, 6) == [(0, 2), (1, 3), (2, 4), (3, 5), (4, 6)]
    assert enumerate_class(3, 2, 100) == []
    assert enumerate_class(9, 3, 10) == [(0, 9), (1, 8), (4, 7), (5, 6)]
    assert enumerate_class(5, 2, 100) == [(2, 6)]
    assert enumerate_class(6, 2, 100) == [(0, 6), (1, 7)]
    assert enumerate_class(1, 1, 50) == []  # 1 != 2 (mod 3)


def test_enumerate_class_rejects():
    with pytest.raises(ValueError):
        enumerate_class(0, 1, 10)
    with pytest.raises(ValueError):
        enumerate_class(2, 4, 10)
    with pytest.raises(ValueError):
        enumerate_class(2, 1, -1)


def test_enumerate_class_ascending_and_bounded():
    for n in (2, 5, 8, 9, 12):
        for family in (1, 2, 3):
            members = enumerate_class(n, family, 60)
            assert members == sorted(members)
            assert all(0 <= x < y <= 60 for x, y in members)


def test_generator_classifier_duality():
    """enumerate_class produces exactly the classifier's fibers."""
    bound = 60
    by_class: dict[tuple[int, int], set] = {}
    for x in range(bound):
        for y in range(x + 1, bound + 1):
            cls = classify(x, y)
            for f in cls.families:
                by_class.setdefault((cls.n, f), set()).add((x, y))
    seen_values = {n for n, _ in by_class}
    for n in sorted(seen_values):
        for family in (1, 2, 3):
            assert set(enumerate_class(n, family, bound)) == by_class.get((n, family), set())


def test_oracle_formula_agreement_small():
    for variant in (Variant.A, Variant.B):
        for x in range(80):
            for y in range(x + 1, 81):
                assert grundy_bruteforce(Two(x, y), variant) == classify(x, y).n, (x, y, variant)


@given(st.tuples(st.integers(0, 499), st.integers(0, 500)).filter(lambda p: p[0] < p[1]))
def test_classify_total_and_positive(pair):
    cls = classify(*pair)
    assert cls.n >= 1
    assert cls.families
    assert cls.families == tuple(sorted(set(cls.families)))
    assert len(cls.families) == len(cls.witnesses)
    assert all(a >= 0 for a in cls.witnesses)
    for family, a in zip(cls.families, cls.witnesses):
        if family in (2, 3):
            assert a == pair[0]


@given(st.tuples(st.integers(0, 199), st.integers(0, 200)).filter(lambda p: p[0] < p[1]))
def test_one_coin_values_by_induction(pair):
    # One(r) under variant A has successors One(0..r-1); closed form r
    r = pair[0]
    assert grundy_closed_form(One(r)) == r == grundy_bruteforce(One(r))
