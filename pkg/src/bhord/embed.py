"""The order-reflecting map from ordinal terms into the two-label tree universe.

Omega becomes the bare 1-labelled root, a collapse becomes a 0-root over a
1-node over the image of the argument, and a sum maps its entries to sibling
subtrees under a root labelled 1 exactly when the head entry reaches Omega.
Embeddability of images reflects (but need not preserve) the term order; the
check operations below exist to be swept over enumerations and should never
return False.
"""

from functools import lru_cache

from .terms import OMEGA, Ordering, OrdinalTerm, Sum, Theta, _Omega, compare, e_parts, length, leq
from .trees import T2, GapTree, ebar, tree_leq


@lru_cache(maxsize=None)
def embed_term(a: OrdinalTerm) -> GapTree:
    """Image of a valid term in the two-label leafless universe."""
    if type(a) is _Omega:
        return T2.node(1, ())
    if type(a) is Theta:
        return T2.node(0, (T2.node(1, (embed_term(a.arg),)),))
    if a.entries and compare(a.entries[0], OMEGA) is not Ordering.LESS:
        root = 1
    else:
        root = 0
    return T2.node(root, tuple(embed_term(e) for e in a.entries))


def reflection_check(a: OrdinalTerm, b: OrdinalTerm) -> bool:
    """Image embeddability must imply the weak term order."""
    return not tree_leq(embed_term(a), embed_term(b)) or leq(a, b)


def ebar_image_check(a: OrdinalTerm) -> bool:
    """The tree-level coefficient set of the image is the image of the coefficients."""
    return set(ebar(embed_term(a))) == {embed_term(g) for g in e_parts(a)}


def length_monotone_check(a: OrdinalTerm, b: OrdinalTerm) -> bool:
    """Image embeddability must not increase the length measure."""
    return not tree_leq(embed_term(a), embed_term(b)) or length(a) <= length(b)
