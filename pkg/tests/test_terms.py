import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bhord.terms import (
    NOT_DESCENDING,
    OMEGA,
    OMEGA_TERM,
    SINGLETON_SPECIAL,
    ZERO,
    Ordering,
    Sum,
    Theta,
    ValidationReport,
    compare,
    compare_reference,
    dominates_eps,
    e_parts,
    eps_dominated,
    is_valid,
    length,
    leq,
    numeral,
    sort_key,
    validate,
)

ONE = numeral(1)
T0 = Theta(ZERO)


def test_validate_singleton_special():
    report = validate(Sum((OMEGA,)))
    assert isinstance(report, ValidationReport)
    assert report.code == SINGLETON_SPECIAL
    assert report.path == ()


def test_validate_zero_and_descending():
    assert validate(ZERO) is ZERO
    assert validate(Sum((ONE, ZERO, ZERO))) == Sum((ONE, ZERO, ZERO))


def test_validate_not_descending():
    report = validate(Sum((ZERO, ONE)))
    assert isinstance(report, ValidationReport)
    assert report.code == NOT_DESCENDING
    assert report.index == 0


def test_validate_reports_nested_path():
    report = validate(Theta(Sum((OMEGA,))))
    assert report.path == (0,)
    report = validate(Sum((ONE, Sum((ZERO, ONE)))))
    assert report.path == (1,)


@pytest.mark.parametrize(
    "a,b",
    [
        (ZERO, OMEGA),
        (T0, OMEGA),
        (OMEGA, Sum((OMEGA, ZERO))),
        (Theta(OMEGA), Theta(Sum((OMEGA, ZERO)))),
    ],
)
def test_compare_examples(a, b):
    assert compare(a, b) is Ordering.LESS
    assert compare(b, a) is Ordering.GREATER


def test_compare_equal_is_syntactic():
    assert compare(Sum((OMEGA, ZERO)), Sum((OMEGA, ZERO))) is Ordering.EQUAL
    assert compare(OMEGA_TERM, Sum((ONE,))) is Ordering.EQUAL


def test_e_parts():
    assert e_parts(OMEGA) == ()
    assert e_parts(Theta(OMEGA)) == (Theta(OMEGA),)
    assert e_parts(Sum((OMEGA, T0, T0))) == (T0,)


def test_e_parts_sorted():
    big = Theta(OMEGA)
    parts = e_parts(Sum((big, T0, T0)))
    assert parts == (T0, big)


def test_length():
    assert length(OMEGA) == 0
    assert length(Theta(Theta(OMEGA))) == 2
    assert length(Sum((OMEGA, ZERO))) == 2
    assert length(numeral(3)) == 3


def test_numeral():
    assert numeral(0) == ZERO
    assert numeral(1) == Sum((ZERO,))
    assert numeral(3) == Sum((ZERO, ZERO, ZERO))
    with pytest.raises(ValueError):
        numeral(-1)


def test_eps_predicates():
    assert eps_dominated(OMEGA, ZERO)  # no coefficients, vacuous
    assert dominates_eps(T0, Sum((T0, ZERO)))
    assert eps_dominated(Sum((OMEGA, T0)), Theta(Sum((OMEGA, T0))))
    assert not dominates_eps(OMEGA, T0)


def test_leq():
    assert leq(ZERO, ZERO)
    assert leq(ZERO, OMEGA)
    assert not leq(OMEGA, ZERO)


# --- randomized properties ---------------------------------------------------


def _sorted_sum(entries):
    entries = sorted(entries, key=sort_key, reverse=True)
    if len(entries) == 1 and type(entries[0]) in (type(OMEGA), Theta):
        return entries[0]
    return Sum(tuple(entries))


valid_terms = st.recursive(
    st.sampled_from([OMEGA, ZERO, ONE, numeral(2)]),
    lambda sub: st.builds(Theta, sub)
    | st.lists(sub, min_size=0, max_size=3).map(_sorted_sum),
    max_leaves=8,
)

raw_terms = st.recursive(
    st.sampled_from([OMEGA, ZERO, ONE]),
    lambda sub: st.builds(Theta, sub)
    | st.lists(sub, min_size=0, max_size=3).map(lambda xs: Sum(tuple(xs))),
    max_leaves=8,
)


@given(valid_terms)
def test_generated_terms_are_valid(a):
    assert is_valid(a)


@given(valid_terms, valid_terms)
def test_trichotomy(a, b):
    forward, backward = compare(a, b), compare(b, a)
    assert forward is Ordering(-int(backward))
    assert (forward is Ordering.EQUAL) == (a == b)


@settings(max_examples=60)
@given(valid_terms, valid_terms)
def test_matches_reference(a, b):
    assert compare(a, b) is compare_reference(a, b)


@given(valid_terms, valid_terms, valid_terms)
def test_transitive(a, b, c):
    if compare(a, b) is Ordering.LESS and compare(b, c) is Ordering.LESS:
        assert compare(a, c) is Ordering.LESS


@given(valid_terms)
def test_e_domination(a):
    assert eps_dominated(a, Theta(a))


@given(valid_terms)
def test_coefficients_shrink(a):
    for g in e_parts(a):
        assert leq(g, a)
        assert length(g) <= length(a)


@given(raw_terms)
def test_validate_total(a):
    outcome = validate(a)
    assert isinstance(outcome, ValidationReport) or outcome is a
    assert is_valid(a) == (outcome is a)
