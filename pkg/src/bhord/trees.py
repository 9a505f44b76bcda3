"""Finite unordered trees with bounded inner labels and the gap embedding order.

A universe fixes the label bound N and the leaf alphabet X; trees carry
their universe so that cross-universe comparisons fail loudly.  Children are
multisets, stored in a canonical total order chosen purely for storage and
printing (leaves first, then by label, then lexicographically); structural
equality therefore coincides with multiset equality.  The canonical order is
never used as the mathematical embedding relation.

The embedding relation ``tree_leq`` matches equal labels with a multiset
embedding of the children, or maps a whole tree into a child subject to the
gap condition: the receiving label must dominate the embedded tree's rank.
The multiset relation is decided by exact bipartite matching; greedy
assignment is incomplete for partial element orders.
"""

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterable, Optional, Sequence

from .errors import DomainError, UniverseMismatch
from .terms import OrdinalTerm, compare, is_valid, leq as term_leq


class Alphabet:
    """Leaf alphabet: a carrier with a decidable partial order."""

    def leq(self, x, y) -> bool:
        raise NotImplementedError

    def check(self, x) -> None:
        """Raise DomainError unless x is an admissible payload."""
        raise NotImplementedError

    def cmp(self, x, y) -> int:
        """Canonical total comparison used only for storage order."""
        raise NotImplementedError


@dataclass(frozen=True)
class EmptyAlphabet(Alphabet):
    """The empty alphabet: no leaves exist."""

    def leq(self, x, y) -> bool:
        raise DomainError("the empty alphabet has no elements")

    def check(self, x) -> None:
        raise DomainError("the empty alphabet admits no leaf payloads")

    def cmp(self, x, y) -> int:
        raise DomainError("the empty alphabet has no elements")


@dataclass(frozen=True)
class TermAlphabet(Alphabet):
    """Ordinal terms under their (linear) order."""

    def leq(self, x, y) -> bool:
        return term_leq(x, y)

    def check(self, x) -> None:
        if not isinstance(x, OrdinalTerm) or not is_valid(x):
            raise DomainError(f"not a valid ordinal term payload: {x!r}")

    def cmp(self, x, y) -> int:
        return int(compare(x, y))


@dataclass(frozen=True)
class TreeAlphabet(Alphabet):
    """Rank-at-most-zero trees of a fixed universe, under the embedding order."""

    universe: "Universe"

    def leq(self, x, y) -> bool:
        return tree_leq(x, y)

    def check(self, x) -> None:
        if not isinstance(x, GapTree):
            raise DomainError(f"not a tree payload: {x!r}")
        if x.universe != self.universe:
            raise DomainError("leaf payload belongs to a different universe")
        if rank(x) > 0:
            raise DomainError("leaf payload must have rank at most 0")

    def cmp(self, x, y) -> int:
        return canonical_cmp(x, y)


EMPTY = EmptyAlphabet()
TERMS = TermAlphabet()


@dataclass(frozen=True)
class Universe:
    """The ambient tree universe: label bound and leaf alphabet."""

    width: int
    alphabet: Alphabet = EMPTY

    def node(self, label: int, children: Iterable["GapTree"] = ()) -> "Node":
        if not 0 <= label < self.width:
            raise DomainError(f"label {label} out of range for width {self.width}")
        kids = tuple(children)
        for c in kids:
            if c.universe != self:
                raise UniverseMismatch("child belongs to a different universe")
        return Node(label, _canonical(kids), self)

    def leaf(self, payload) -> "Leaf":
        self.alphabet.check(payload)
        return Leaf(payload, self)


T2 = Universe(2, EMPTY)


class GapTree:
    __slots__ = ()


class Node(GapTree):
    __slots__ = ("label", "children", "universe", "_hash")

    def __init__(self, label: int, children: tuple, universe: Universe):
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "_hash", hash((label, children, universe)))

    def __setattr__(self, name, value):
        raise AttributeError("Node is immutable")

    def __repr__(self):
        return f"{self.label}*{list(self.children)!r}"

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is Node
            and self._hash == other._hash
            and self.label == other.label
            and self.children == other.children
            and self.universe == other.universe
        )


class Leaf(GapTree):
    __slots__ = ("payload", "universe", "_hash")

    def __init__(self, payload, universe: Universe):
        object.__setattr__(self, "payload", payload)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "_hash", hash(("leaf", payload, universe)))

    def __setattr__(self, name, value):
        raise AttributeError("Leaf is immutable")

    def __repr__(self):
        return f"Leaf({self.payload!r})"

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is Leaf
            and self._hash == other._hash
            and self.payload == other.payload
            and self.universe == other.universe
        )


def canonical_cmp(s: GapTree, t: GapTree) -> int:
    """Total storage order on same-universe trees: leaves first, then labels."""
    s_leaf, t_leaf = type(s) is Leaf, type(t) is Leaf
    if s_leaf != t_leaf:
        return -1 if s_leaf else 1
    if s_leaf:
        return s.universe.alphabet.cmp(s.payload, t.payload)
    if s.label != t.label:
        return -1 if s.label < t.label else 1
    for x, y in zip(s.children, t.children):
        c = canonical_cmp(x, y)
        if c:
            return c
    return len(s.children) - len(t.children)


def _canonical(kids: tuple) -> tuple:
    return tuple(sorted(kids, key=cmp_to_key(canonical_cmp)))


def rank(t: GapTree) -> int:
    """-1 on leaves, the root label on inner nodes."""
    return -1 if type(t) is Leaf else t.label


def height(t: GapTree) -> int:
    if type(t) is Leaf or not t.children:
        return 0
    return 1 + max(height(c) for c in t.children)


def tree_size(t: GapTree) -> int:
    """Number of vertices; leaves count as one regardless of payload."""
    if type(t) is Leaf:
        return 1
    return 1 + sum(tree_size(c) for c in t.children)


def deep_size(t: GapTree) -> int:
    """Vertex count where a tree-valued leaf payload contributes its own size."""
    if type(t) is Leaf:
        return deep_size(t.payload) if isinstance(t.payload, GapTree) else 1
    return 1 + sum(deep_size(c) for c in t.children)


def injection_exists(xs: Sequence, ys: Sequence, relation) -> bool:
    """Is there an injection f with relation(xs[i], ys[f(i)]) for all i?

    Exact augmenting-path matching; complete for arbitrary edge relations.
    """
    if len(xs) > len(ys):
        return False
    adjacency = [[j for j, y in enumerate(ys) if relation(x, y)] for x in xs]
    owner: list[Optional[int]] = [None] * len(ys)

    def assign(i: int, seen: set) -> bool:
        for j in adjacency[i]:
            if j not in seen:
                seen.add(j)
                if owner[j] is None or assign(owner[j], seen):
                    owner[j] = i
                    return True
        return False

    return all(assign(i, set()) for i in range(len(xs)))


def multiset_leq(s: Sequence[GapTree], t: Sequence[GapTree]) -> bool:
    """Multiset embedding: an injection matching each left tree below a right tree."""
    return injection_exists(s, t, tree_leq)


def tree_leq(s: GapTree, t: GapTree) -> bool:
    """The gap embedding order."""
    if s.universe != t.universe:
        raise UniverseMismatch("cannot compare trees from different universes")
    return _tleq(s, t)


@lru_cache(maxsize=1 << 20)
def _tleq(s: GapTree, t: GapTree) -> bool:
    if type(t) is Leaf:
        return type(s) is Leaf and s.universe.alphabet.leq(s.payload, t.payload)
    if (
        type(s) is Node
        and s.label == t.label
        and injection_exists(s.children, t.children, _tleq)
    ):
        return True
    # Descent into a child, guarded by the gap condition on the receiving label.
    return rank(s) <= t.label and any(_tleq(s, c) for c in t.children)


def _nested_alphabet(u: Universe) -> "Universe":
    """The inner universe when u's leaves carry rank-zero trees one level up."""
    if not isinstance(u.alphabet, TreeAlphabet):
        raise DomainError("operation requires a universe with tree-valued leaves")
    inner = u.alphabet.universe
    if inner.width != u.width + 1:
        raise DomainError("inner universe width must exceed the outer width by one")
    return inner


def nested_universe(n: int, alphabet: Alphabet = EMPTY) -> tuple[Universe, Universe]:
    """Build the pair (outer, inner) with outer leaves carrying inner rank-0 trees."""
    inner = Universe(n + 1, alphabet)
    return Universe(n, TreeAlphabet(inner)), inner


def pi(t: GapTree) -> GapTree:
    """Unwrap leaves and shift inner labels up by one."""
    inner = _nested_alphabet(t.universe)
    if type(t) is Leaf:
        if rank(t.payload) > 0:
            raise DomainError("leaf payload must have rank at most 0")
        return t.payload
    return inner.node(t.label + 1, tuple(pi(c) for c in t.children))


def pi_inverse(t: GapTree, domain: Universe) -> GapTree:
    """Recursive un-shift inverting ``pi`` on its range."""
    if _nested_alphabet(domain) != t.universe:
        raise DomainError("tree does not belong to the inner universe of the domain")
    if rank(t) <= 0:
        return domain.leaf(t)
    return domain.node(t.label - 1, tuple(pi_inverse(c, domain) for c in t.children))


def kappa(sigma: Sequence[GapTree], universe: Universe | None = None) -> GapTree:
    """Send a multiset of nested-universe trees to the rank-0 tree over their images."""
    if universe is None:
        if not sigma:
            raise DomainError("kappa of an empty multiset needs an explicit universe")
        universe = sigma[0].universe
    inner = _nested_alphabet(universe)
    for t in sigma:
        if t.universe != universe:
            raise UniverseMismatch("kappa arguments must share one universe")
    return inner.node(0, tuple(pi(t) for t in sigma))


def supp(t: GapTree) -> tuple[GapTree, ...]:
    """Leaf payloads occurring in t, deduplicated in canonical order."""
    _nested_alphabet(t.universe)
    out = set()

    def walk(x):
        if type(x) is Leaf:
            out.add(x.payload)
        else:
            for c in x.children:
                walk(c)

    walk(t)
    return _canonical(tuple(out))


def supp_multiset(sigma: Sequence[GapTree]) -> tuple[GapTree, ...]:
    """Union of ``supp`` over a multiset."""
    out = set()
    for t in sigma:
        out.update(supp(t))
    return _canonical(tuple(out))


def ebar(t: GapTree) -> tuple[GapTree, ...]:
    """Tree-level coefficient set on the two-label leafless universe."""
    u = t.universe
    if u.width != 2 or not isinstance(u.alphabet, EmptyAlphabet):
        raise DomainError("ebar is defined on the two-label universe without leaves")
    return _canonical(tuple(_ebar_set(t)))


def _ebar_set(t: GapTree) -> frozenset:
    if t.label == 0 and any(c.label == 1 for c in t.children):
        return frozenset((t,))
    return frozenset().union(*(_ebar_set(c) for c in t.children)) if t.children else frozenset()
