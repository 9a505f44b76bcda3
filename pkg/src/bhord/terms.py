"""Core term system for the Bachmann-Howard notation.

Terms are built from three constructors: the distinguished constant Omega,
a collapse Theta(arg), and Cantor-normal-form sums Sum(entries) standing for
omega^a0 + ... + omega^a(n-1).  The order ``compare``, the coefficient set
``e_parts`` and term validity are mutually recursive; the recursion is well
founded because it descends along the length measure ``length``.

Values are immutable and hashable.  Construction never checks the sum-side
conditions, so any term value doubles as a "raw" (pre-validation) term;
``validate`` decides whether the conditions hold and reports the first
violation otherwise.  All functions here are pure; the comparison memo is a
process-global idempotent cache, safe under concurrent use.
"""

from dataclasses import dataclass
from enum import IntEnum
from functools import cmp_to_key, lru_cache
from typing import Iterable, Union


class OrdinalTerm:
    """Base class for term values; use OMEGA, Theta(...) and Sum(...)."""

    __slots__ = ()


class _Omega(OrdinalTerm):
    __slots__ = ()

    def __repr__(self):
        return "OMEGA"

    def __hash__(self):
        return 0x5CA1AB1E

    def __eq__(self, other):
        return other is self or type(other) is _Omega


OMEGA = _Omega()


class Theta(OrdinalTerm):
    """Collapse of a single argument term."""

    __slots__ = ("arg", "_hash")

    def __init__(self, arg: OrdinalTerm):
        object.__setattr__(self, "arg", arg)
        object.__setattr__(self, "_hash", hash((1, arg)))

    def __setattr__(self, name, value):
        raise AttributeError("Theta is immutable")

    def __repr__(self):
        return f"Theta({self.arg!r})"

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is Theta
            and self._hash == other._hash
            and self.arg == other.arg
        )


class Sum(OrdinalTerm):
    """Cantor-normal-form sum; the empty sum is zero."""

    __slots__ = ("entries", "_hash")

    def __init__(self, entries: Iterable[OrdinalTerm] = ()):
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "_hash", hash((2, self.entries)))

    def __setattr__(self, name, value):
        raise AttributeError("Sum is immutable")

    def __repr__(self):
        return f"Sum({list(self.entries)!r})"

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is Sum
            and self._hash == other._hash
            and self.entries == other.entries
        )


# A raw term has the same shape as a valid one; only `validate` separates them.
RawTerm = OrdinalTerm

ZERO = Sum()


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class ValidationReport:
    """Describes the first well-formedness violation found in a raw term.

    ``path`` is the child-index trail from the root to the offending node
    (Theta counts as one child).  For NOT_DESCENDING, ``index`` is the
    position i of the adjacent pair (i, i+1) that is out of order.
    """

    code: str  # "SingletonSpecial" or "NotDescending"
    path: tuple[int, ...]
    index: int | None = None

    def describe(self) -> str:
        where = "/".join(map(str, self.path)) or "root"
        if self.code == "SingletonSpecial":
            return f"{self.code} at {where}: singleton sum of Omega/Theta form"
        return f"{self.code} at {where}: entries {self.index}, {self.index + 1} out of order"


SINGLETON_SPECIAL = "SingletonSpecial"
NOT_DESCENDING = "NotDescending"


def length(a: RawTerm) -> int:
    """The length measure: 0 on Omega, +1 per Theta, n plus entries on sums."""
    if type(a) is _Omega:
        return 0
    if type(a) is Theta:
        return length(a.arg) + 1
    return len(a.entries) + sum(length(e) for e in a.entries)


def numeral(n: int) -> OrdinalTerm:
    """The finite ordinal n as a sum of n zeros."""
    if n < 0:
        raise ValueError("numerals are non-negative")
    return Sum((ZERO,) * n)


OMEGA_TERM = Sum((numeral(1),))  # the least infinite ordinal, omega


@lru_cache(maxsize=None)
def _e_set(a: OrdinalTerm) -> frozenset:
    if type(a) is _Omega:
        return frozenset()
    if type(a) is Theta:
        return frozenset((a,))
    return frozenset().union(*(_e_set(e) for e in a.entries)) if a.entries else frozenset()


@lru_cache(maxsize=1 << 20)
def _less(a: OrdinalTerm, b: OrdinalTerm) -> bool:
    # Sum on the left.
    if type(a) is Sum:
        if type(b) is Sum:
            # Lexicographic on entries; a proper prefix is smaller.
            for x, y in zip(a.entries, b.entries):
                if x != y:
                    return _less(x, y)
            return len(a.entries) < len(b.entries)
        # b is Omega or a collapse.
        return not a.entries or _less(a.entries[0], b)
    # Omega on the left: below sums whose head weakly dominates Omega.
    if type(a) is _Omega:
        return type(b) is Sum and bool(b.entries) and _leq(OMEGA, b.entries[0])
    # Collapse on the left.
    if type(b) is _Omega:
        return True
    if type(b) is Sum:
        return bool(b.entries) and _leq(a, b.entries[0])
    # Collapse against collapse: ordinary descent guarded by the coefficient
    # condition, or absorption into a coefficient of the right argument.
    if _less(a.arg, b.arg) and all(_less(g, b) for g in _e_set(a.arg)):
        return True
    return any(_leq(a, g) for g in _e_set(b.arg))


def _leq(a: OrdinalTerm, b: OrdinalTerm) -> bool:
    return a == b or _less(a, b)


def compare(a: OrdinalTerm, b: OrdinalTerm) -> Ordering:
    """Three-valued comparison of valid terms (memoized)."""
    if a == b:
        return Ordering.EQUAL
    return Ordering.LESS if _less(a, b) else Ordering.GREATER


def leq(a: OrdinalTerm, b: OrdinalTerm) -> bool:
    return compare(a, b) is not Ordering.GREATER


def e_parts(a: OrdinalTerm) -> tuple[OrdinalTerm, ...]:
    """Collapse-form coefficients of a valid term, deduplicated and sorted."""
    return tuple(sorted(_e_set(a), key=sort_key))


def eps_dominated(a: OrdinalTerm, b: OrdinalTerm) -> bool:
    """True when every coefficient of a lies strictly below b."""
    return all(compare(g, b) is Ordering.LESS for g in _e_set(a))


def dominates_eps(a: OrdinalTerm, b: OrdinalTerm) -> bool:
    """True when a is weakly below some coefficient of b."""
    return any(leq(a, g) for g in _e_set(b))


_term_key = cmp_to_key(lambda a, b: int(compare(a, b)))


def sort_key(a: OrdinalTerm):
    """Key object ordering terms by ``compare``."""
    return _term_key(a)


def validate(raw: RawTerm) -> Union[OrdinalTerm, ValidationReport]:
    """Check the sum-side conditions; return the term itself or a report.

    Children are validated bottom-up, so the descent check may call
    ``compare`` on subterms that are already known valid.
    """
    report = _check(raw, ())
    return raw if report is None else report


def _check(t: RawTerm, path: tuple[int, ...]) -> ValidationReport | None:
    if type(t) is _Omega:
        return None
    if type(t) is Theta:
        return _check(t.arg, path + (0,))
    for i, e in enumerate(t.entries):
        report = _check(e, path + (i,))
        if report is not None:
            return report
    if len(t.entries) == 1 and type(t.entries[0]) in (_Omega, Theta):
        return ValidationReport(SINGLETON_SPECIAL, path)
    for i in range(len(t.entries) - 1):
        if compare(t.entries[i + 1], t.entries[i]) is Ordering.GREATER:
            return ValidationReport(NOT_DESCENDING, path, index=i)
    return None


def is_valid(raw: RawTerm) -> bool:
    return _check(raw, ()) is None


def compare_reference(a: OrdinalTerm, b: OrdinalTerm) -> Ordering:
    """Unmemoized transcription of the order clauses; the test oracle.

    Kept deliberately independent of ``compare``: no caching, coefficient
    sets recomputed on every use.
    """
    if a == b:
        return Ordering.EQUAL
    return Ordering.LESS if _less_reference(a, b) else Ordering.GREATER


def _e_reference(a):
    if type(a) is _Omega:
        return set()
    if type(a) is Theta:
        return {a}
    out = set()
    for e in a.entries:
        out |= _e_reference(e)
    return out


def _less_reference(a, b):
    def lt(x, y):
        return _less_reference(x, y)

    def le(x, y):
        return x == y or _less_reference(x, y)

    if type(a) is _Omega:
        return type(b) is Sum and len(b.entries) > 0 and le(OMEGA, b.entries[0])
    if type(a) is Theta:
        if type(b) is _Omega:
            return True
        if type(b) is Sum:
            return len(b.entries) > 0 and le(a, b.entries[0])
        if lt(a.arg, b.arg) and all(lt(g, b) for g in _e_reference(a.arg)):
            return True
        return any(le(a, g) for g in _e_reference(b.arg))
    # a is a sum
    if type(b) is _Omega or type(b) is Theta:
        return len(a.entries) == 0 or lt(a.entries[0], b)
    m, n = len(a.entries), len(b.entries)
    for j in range(min(m, n) + 1):
        if any(a.entries[i] != b.entries[i] for i in range(j)):
            break
        if j == m and m < n:
            return True
        if j < min(m, n) and lt(a.entries[j], b.entries[j]):
            return True
    return False
