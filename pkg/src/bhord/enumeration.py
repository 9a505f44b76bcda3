"""Exhaustive generators and brute-force search at desk scale.

Terms are generated layer by layer along the length measure, trees along
their vertex count (payload-inclusive for nested universes).  Layers are
exact: every valid object of the measure appears once, in a deterministic
order.  All sweeps take an item budget and fail loudly instead of hanging.
"""

import os
import random
from dataclasses import dataclass, field
from functools import cmp_to_key

import numpy as np

from .errors import DomainError, ResourceLimit
from .terms import (
    OMEGA,
    ZERO,
    Ordering,
    OrdinalTerm,
    Sum,
    Theta,
    _Omega,
    _e_set,
    compare,
    length,
    numeral,
    sort_key,
)
from .trees import (
    EMPTY,
    EmptyAlphabet,
    GapTree,
    Leaf,
    Universe,
    canonical_cmp,
    deep_size,
    tree_leq,
)


def default_budget() -> int:
    return int(os.environ.get("BHORD_BUDGET", 2_000_000))


@dataclass(frozen=True)
class EnumerationLayer:
    measure: int
    items: tuple


def _descending_tuples(pool, weights, slots, total, start=0):
    """Weakly descending tuples (by pool position) with prescribed total weight."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for idx in range(start, len(pool)):
        w = weights[idx]
        if w <= total:
            head = (pool[idx],)
            for rest in _descending_tuples(pool, weights, slots - 1, total - w, idx):
                yield head + rest


def term_layers(max_len: int, budget: int | None = None) -> list[EnumerationLayer]:
    """All valid terms grouped by exact length."""
    budget = default_budget() if budget is None else budget
    layers = [EnumerationLayer(0, (OMEGA, ZERO))]
    count = 2
    for k in range(1, max_len + 1):
        new: list[OrdinalTerm] = [Theta(t) for t in layers[k - 1].items]
        pool = [t for layer in layers for t in layer.items]
        pool.sort(key=sort_key, reverse=True)
        weights = [length(t) for t in pool]
        for n in range(1, k + 1):
            for entries in _descending_tuples(pool, weights, n, k - n):
                if n == 1 and type(entries[0]) in (_Omega, Theta):
                    continue
                new.append(Sum(entries))
        count += len(new)
        if count > budget:
            raise ResourceLimit(
                f"term enumeration exceeded budget {budget} at length {k}",
                partial=layers,
            )
        layers.append(EnumerationLayer(k, tuple(new)))
    return layers


_TERM_LAYER_CACHE: dict[int, list[EnumerationLayer]] = {}


def enum_terms(max_len: int, budget: int | None = None) -> list[OrdinalTerm]:
    """All valid terms of length at most max_len, in layer order."""
    cached = _TERM_LAYER_CACHE.get(max_len)
    if cached is None:
        cached = term_layers(max_len, budget)
        _TERM_LAYER_CACHE[max_len] = cached
    return [t for layer in cached for t in layer.items]


def universe_tree_layers(
    universe: Universe,
    max_size: int,
    leaf_pool: tuple = (),
    budget: int | None = None,
) -> list[EnumerationLayer]:
    """Trees of a universe by payload-inclusive vertex count.

    ``leaf_pool`` lists the admissible leaf payloads; it must be finite, so
    infinite alphabets are enumerated by bounding the payloads first.
    """
    budget = default_budget() if budget is None else budget
    leaves = [universe.leaf(p) for p in leaf_pool]
    count = 0
    layers: list[EnumerationLayer] = []
    for s in range(1, max_size + 1):
        new: list[GapTree] = [lf for lf in leaves if deep_size(lf) == s]
        pool = [t for layer in layers for t in layer.items]
        pool.sort(key=cmp_to_key(canonical_cmp))
        weights = [deep_size(t) for t in pool]
        for label in range(universe.width):
            for n in range(0, s):
                for kids in _descending_tuples(pool, weights, n, s - 1):
                    new.append(universe.node(label, kids))
        count += len(new)
        if count > budget:
            raise ResourceLimit(
                f"tree enumeration exceeded budget {budget} at size {s}",
                partial=layers,
            )
        layers.append(EnumerationLayer(s, tuple(new)))
    return layers


def enum_universe_trees(
    universe: Universe,
    max_size: int,
    leaf_pool: tuple = (),
    budget: int | None = None,
) -> list[GapTree]:
    return [
        t
        for layer in universe_tree_layers(universe, max_size, leaf_pool, budget)
        for t in layer.items
    ]


def enum_trees(n: int, max_size: int, budget: int | None = None) -> list[GapTree]:
    """All leafless trees with labels below n and at most max_size vertices."""
    if n < 1:
        raise DomainError("enum_trees needs at least one label")
    return enum_universe_trees(Universe(n, EMPTY), max_size, (), budget)


@dataclass
class LinearityReport:
    max_len: int
    item_count: int
    transitive_len: int
    sampled_triples: int
    pair_violations: list = field(default_factory=list)
    transitivity_violations: list = field(default_factory=list)
    sample_violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (
            self.pair_violations or self.transitivity_violations or self.sample_violations
        )


def linearity_audit(
    max_len: int = 7,
    transitive_len: int | None = None,
    seed: int = 0,
    samples: int = 2000,
    budget: int | None = None,
) -> LinearityReport:
    """Sort all terms up to max_len and verify the order is total.

    Sorting gives a strict rank; exhaustive pairwise comparison against the
    rank checks trichotomy and asymmetry at once.  Transitivity is verified
    exhaustively on the shorter layer via a boolean matrix product, plus a
    seeded sample of triples at full length.
    """
    transitive_len = max(0, max_len - 2) if transitive_len is None else transitive_len
    terms = enum_terms(max_len, budget)
    ordered = sorted(terms, key=sort_key)
    report = LinearityReport(max_len, len(ordered), transitive_len, samples)
    cap = 20
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            want = Ordering.LESS if i < j else Ordering.GREATER if i > j else Ordering.EQUAL
            got = compare(a, b)
            if got is not want:
                if len(report.pair_violations) < cap:
                    report.pair_violations.append((a, b, got, want))
    sub = sorted((t for t in terms if length(t) <= transitive_len), key=sort_key)
    m = len(sub)
    rel = np.zeros((m, m), dtype=bool)
    for i, a in enumerate(sub):
        for j, b in enumerate(sub):
            rel[i, j] = compare(a, b) is Ordering.LESS
    closure = (rel.astype(np.uint8) @ rel.astype(np.uint8)) > 0
    bad = closure & ~rel
    for i, j in zip(*np.nonzero(bad)):
        if len(report.transitivity_violations) < cap:
            report.transitivity_violations.append((sub[i], sub[j]))
    rng = random.Random(seed)
    n = len(ordered)
    for _ in range(samples):
        a, b, c = (ordered[rng.randrange(n)] for _ in range(3))
        if (
            compare(a, b) is Ordering.LESS
            and compare(b, c) is Ordering.LESS
            and compare(a, c) is not Ordering.LESS
        ):
            report.sample_violations.append((a, b, c))
    return report


def _up_masks(trees: list[GapTree]) -> list[int]:
    masks = []
    for s in trees:
        m = 0
        for j, t in enumerate(trees):
            if tree_leq(s, t):
                m |= 1 << j
        masks.append(m)
    return masks


def _longest_from(mask: int, up: list[int], memo: dict, bounded: bool) -> int:
    hit = memo.get(mask)
    if hit is not None:
        return hit
    best = 0
    limit = mask.bit_count()
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        i = low.bit_length() - 1
        cand = 1 + _longest_from(mask & ~up[i], up, memo, bounded)
        if cand > best:
            best = cand
            if bounded and best == limit:
                break
    memo[mask] = best
    return best


def _witness(mask: int, up: list[int], memo: dict, trees: list[GapTree]) -> list[GapTree]:
    out = []
    while mask and memo.get(mask, 0) > 0:
        target = memo[mask]
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            i = low.bit_length() - 1
            nxt = mask & ~up[i]
            if nxt in memo and 1 + memo[nxt] == target:
                out.append(trees[i])
                mask = nxt
                break
        else:
            break
    return out


def longest_bad_sequence(
    n: int, max_size: int, budget: int | None = None
) -> tuple[int, list[GapTree]]:
    """Longest sequence of enumerated trees with no earlier member embeddable
    in a later one, plus one witness.

    The search places one tree at a time; placing t bars every tree it embeds
    into (including itself, by reflexivity), so states shrink strictly.  The
    bounded search cuts a branch as soon as the remaining-count upper bound is
    met; trying trees with small up-sets first reaches that bound quickly.
    """
    trees = enum_trees(n, max_size, budget)
    up = _up_masks(trees)
    order = sorted(range(len(trees)), key=lambda i: up[i].bit_count())
    trees = [trees[i] for i in order]
    up_sorted = []
    pos = {old: new for new, old in enumerate(order)}
    for i in order:
        m = 0
        rest = up[i]
        while rest:
            low = rest & -rest
            rest ^= low
            m |= 1 << pos[low.bit_length() - 1]
        up_sorted.append(m)
    memo: dict[int, int] = {}
    full = (1 << len(trees)) - 1
    best = _longest_from(full, up_sorted, memo, bounded=True)
    return best, _witness(full, up_sorted, memo, trees)


def longest_bad_sequence_naive(n: int, max_size: int, budget: int | None = None) -> int:
    """Exhaustive state-space search without the upper-bound cut; the oracle."""
    trees = enum_trees(n, max_size, budget)
    up = _up_masks(trees)
    memo: dict[int, int] = {}
    return _longest_from((1 << len(trees)) - 1, up, memo, bounded=False)


def descent_sampler(
    start: OrdinalTerm, steps: int, seed: int = 0
) -> list[OrdinalTerm]:
    """A strictly descending chain from start, built by randomized moves.

    Every adjacent pair is verified by the comparator before it is accepted;
    the chain stops at zero or after the requested number of steps.
    """
    rng = random.Random(seed)
    small_pool = enum_terms(2)
    chain = [start]
    current = start
    for _ in range(steps):
        if current == ZERO:
            break
        candidates: list[OrdinalTerm] = []
        if type(current) is Sum:
            kept = current.entries[:-1]
            if len(kept) == 1 and type(kept[0]) in (_Omega, Theta):
                candidates.append(kept[0])
            else:
                candidates.append(Sum(kept))
            candidates.append(current.entries[0])
        elif type(current) is Theta:
            candidates.extend(_e_set(current.arg))
            candidates.extend(Theta(t) for t in small_pool)
        else:  # Omega
            candidates.extend(Theta(t) for t in small_pool)
        candidates.extend(numeral(k) for k in (0, 1, 2))
        rng.shuffle(candidates)
        step = next(
            (c for c in candidates if compare(c, current) is Ordering.LESS), ZERO
        )
        chain.append(step)
        current = step
    return chain
