"""Cantor-normal-form arithmetic on ordinal terms.

Omega and collapses are identified with their singleton sums for these
operations; results are normalized back, so a singleton sum of Omega or of
collapse form is always unwrapped.  Only the operations actually needed by
the term system are provided: addition, multiplication by omega and by
Omega on the left, base-omega exponentiation, and the two-argument
Veblen-style function built from them.
"""

from .errors import DomainError
from .terms import (
    OMEGA,
    Ordering,
    OrdinalTerm,
    Sum,
    Theta,
    _Omega,
    compare,
    leq,
    numeral,
)


def _entries(a: OrdinalTerm) -> tuple[OrdinalTerm, ...]:
    """View a term as its sum entries (Omega/collapse become singletons)."""
    if type(a) is Sum:
        return a.entries
    return (a,)


def _from_entries(entries: tuple[OrdinalTerm, ...]) -> OrdinalTerm:
    if len(entries) == 1 and type(entries[0]) in (_Omega, Theta):
        return entries[0]
    return Sum(entries)


def add(a: OrdinalTerm, b: OrdinalTerm) -> OrdinalTerm:
    """CNF addition: left entries strictly below the right head are absorbed."""
    xs, ys = _entries(a), _entries(b)
    if not ys:
        return a
    head = ys[0]
    k = len(xs)
    while k > 0 and compare(xs[k - 1], head) is Ordering.LESS:
        k -= 1
    return _from_entries(xs[:k] + ys)


ONE = numeral(1)


def omega_mul(a: OrdinalTerm) -> OrdinalTerm:
    """Left multiplication by omega."""
    if type(a) in (_Omega, Theta):
        return a
    return _from_entries(tuple(add(ONE, e) for e in a.entries))


def omega_exp(a: OrdinalTerm) -> OrdinalTerm:
    """Base-omega exponentiation; fixed on Omega and collapse forms."""
    if type(a) in (_Omega, Theta):
        return a
    return Sum((a,))


def big_omega_mul(a: OrdinalTerm) -> OrdinalTerm:
    """Left multiplication by Omega."""
    if type(a) is Sum and not a.entries:
        return a
    return _from_entries(tuple(add(OMEGA, e) for e in _entries(a)))


def veblen(a: OrdinalTerm, b: OrdinalTerm) -> OrdinalTerm:
    """The function (a, b) -> collapse of Omega*a + b, defined below Omega."""
    if not (compare(a, OMEGA) is Ordering.LESS and compare(b, OMEGA) is Ordering.LESS):
        raise DomainError("veblen arguments must lie strictly below Omega")
    return Theta(add(big_omega_mul(a), b))
