"""Decision procedure for membership in the coefficient-controlled sets C_a(b).

C_a(b) is the least set containing Omega and every term strictly below b
that is closed under sums and under collapses of members strictly below a.
Membership of a sum is decided through its entries; this is licensed by the
equivalence with coefficient-set containment (``e_closure_check``), which
turns the inductive closure into a terminating structural recursion.  A
collapse can enter only through the strictly-below-b clause or through the
collapse clause: singleton sums of collapse form are not valid terms.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .terms import (
    OMEGA,
    Ordering,
    OrdinalTerm,
    Sum,
    Theta,
    _Omega,
    compare,
    _e_set,
)


@lru_cache(maxsize=1 << 20)
def c_member(g: OrdinalTerm, a: OrdinalTerm, b: OrdinalTerm) -> bool:
    """Decide whether g lies in C_a(b)."""
    if type(g) is _Omega:
        return True
    if compare(g, b) is Ordering.LESS:
        return True
    if type(g) is Sum:
        return all(c_member(e, a, b) for e in g.entries)
    return compare(g.arg, a) is Ordering.LESS and c_member(g.arg, a, b)


def e_closure_check(g: OrdinalTerm, a: OrdinalTerm, b: OrdinalTerm) -> bool:
    """Containment of the coefficient set of g in C_a(b).

    Equivalent to ``c_member(g, a, b)``; kept as a separate route so the
    equivalence can be asserted over enumerations.
    """
    return all(c_member(d, a, b) for d in _e_set(g))


@dataclass(frozen=True)
class ThetaConditions:
    """Outcome of the bounded minimality test for a candidate g against a.

    ``contains_a`` decides a in C_a(g).  ``omega_trap_counterexample`` is the
    first enumerated term d below Omega with d in C_a(g) but d not below g,
    or None if the bounded search finds none.  Absence is evidence, not
    proof: the untrapped condition quantifies over the whole term set.
    """

    contains_a: bool
    omega_trap_counterexample: OrdinalTerm | None


def theta_conditions(a: OrdinalTerm, g: OrdinalTerm, search_bound: int = 7) -> ThetaConditions:
    """Test the two defining conditions of the collapse value at a."""
    from .enumeration import enum_terms  # deferred: enumeration imports terms

    counterexample = None
    for d in enum_terms(search_bound):
        if (
            compare(d, OMEGA) is Ordering.LESS
            and compare(d, g) is not Ordering.LESS
            and c_member(d, a, g)
        ):
            counterexample = d
            break
    return ThetaConditions(c_member(a, a, g), counterexample)


def collapse_monotone_check(b: OrdinalTerm, g: OrdinalTerm) -> bool:
    """Membership of b in C_g(collapse g) must force collapse b < collapse g.

    Exists to be asserted over enumerations; a False return is a violation.
    """
    if compare(b, g) is not Ordering.LESS:
        raise DomainError("collapse_monotone_check requires b strictly below g")
    if not c_member(b, g, Theta(g)):
        return True
    return compare(Theta(b), Theta(g)) is Ordering.LESS
