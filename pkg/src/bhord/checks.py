"""Invariant suites over exhaustive enumerations.

Each suite sweeps a law over every object within the given bounds and
returns a CheckResult; nothing is asserted here, so the suites can be used
both by the command line and by the test battery.  Relation matrices are
computed bottom-up over size-closed tree lists and the order algebra
(transitivity, antisymmetry) is done with boolean matrix products.
"""

import math
from dataclasses import dataclass, field
from functools import cmp_to_key

import numpy as np

from .arith import ONE, add, big_omega_mul, omega_exp, omega_mul, veblen
from .cset import c_member, collapse_monotone_check, e_closure_check, theta_conditions
from .embed import ebar_image_check, embed_term
from .enumeration import (
    default_budget,
    descent_sampler,
    enum_terms,
    enum_trees,
    enum_universe_trees,
    linearity_audit,
    longest_bad_sequence,
    longest_bad_sequence_naive,
)
from .terms import (
    OMEGA,
    ZERO,
    Ordering,
    Sum,
    Theta,
    _e_set,
    compare,
    compare_reference,
    e_parts,
    length,
    leq,
    sort_key,
)
from .trees import (
    Leaf,
    Node,
    canonical_cmp,
    ebar,
    height,
    injection_exists,
    kappa,
    nested_universe,
    pi,
    pi_inverse,
    rank,
    supp,
    supp_multiset,
    tree_leq,
)

VIOLATION_CAP = 12


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    details: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def fail(self, item) -> None:
        self.passed = False
        if len(self.violations) < VIOLATION_CAP:
            self.violations.append(item)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        info = " ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{status} {self.name} {info}".rstrip()


def _ranked(terms):
    ordered = sorted(terms, key=sort_key)
    return ordered, {t: i for i, t in enumerate(ordered)}


def leq_matrix(trees) -> np.ndarray:
    """Pairwise embedding matrix over a list closed under taking children."""
    index = {t: i for i, t in enumerate(trees)}
    kids = []
    for t in trees:
        if type(t) is Node:
            try:
                kids.append(tuple(index[c] for c in t.children))
            except KeyError:
                raise ValueError("tree list is not closed under children")
        else:
            kids.append(())
    n = len(trees)
    mat = np.zeros((n, n), dtype=bool)
    columns = sorted(range(n), key=lambda j: _msize(trees[j]))
    for j in columns:
        t = trees[j]
        t_leaf = type(t) is Leaf
        for i in range(n):
            s = trees[i]
            if t_leaf:
                mat[i, j] = type(s) is Leaf and s.universe.alphabet.leq(
                    s.payload, t.payload
                )
                continue
            if (
                type(s) is Node
                and s.label == t.label
                and injection_exists(kids[i], kids[j], lambda a, b: mat[a, b])
            ):
                mat[i, j] = True
                continue
            if rank(s) <= t.label and any(mat[i, c] for c in kids[j]):
                mat[i, j] = True
    return mat


def _msize(t) -> int:
    if type(t) is Leaf:
        return 0
    return 1 + sum(_msize(c) for c in t.children)


def _transitive_gap(mat: np.ndarray) -> list[tuple[int, int]]:
    reach = (mat.astype(np.float32) @ mat.astype(np.float32)) > 0
    bad = reach & ~mat
    return list(zip(*np.nonzero(bad)))


def check_linearity(max_len: int = 7, seed: int = 0, budget: int | None = None) -> CheckResult:
    report = linearity_audit(max_len=max_len, seed=seed, budget=budget)
    result = CheckResult("linearity")
    result.details = {
        "max_len": max_len,
        "items": report.item_count,
        "transitive_len": report.transitive_len,
        "sampled_triples": report.sampled_triples,
    }
    for v in report.pair_violations + report.transitivity_violations + report.sample_violations:
        result.fail(v)
    return result


def check_compare_oracle(max_len: int = 6, budget: int | None = None) -> CheckResult:
    terms = enum_terms(max_len, budget)
    result = CheckResult("compare-oracle", details={"max_len": max_len, "items": len(terms)})
    for a in terms:
        for b in terms:
            if compare(a, b) is not compare_reference(a, b):
                result.fail((a, b))
    result.details["pairs"] = len(terms) ** 2
    return result


def check_notation_exercises(max_len: int = 6, budget: int | None = None) -> CheckResult:
    terms = enum_terms(max_len, budget)
    result = CheckResult("notation-exercises", details={"max_len": max_len, "items": len(terms)})
    below = [t for t in terms if compare(t, OMEGA) is Ordering.LESS]

    for a in terms:
        # coefficient domination: every coefficient of a sits below the collapse
        ta = Theta(a)
        if not all(compare(g, ta) is Ordering.LESS for g in _e_set(a)):
            result.fail(("e-domination", a))
        # coefficients never exceed their host, and never grow in length
        for g in _e_set(a):
            if not leq(g, a):
                result.fail(("e-below-host", a, g))
            if length(g) > length(a):
                result.fail(("e-length", a, g))

    for b in terms:
        tb = Theta(b)
        for a in below:
            dominated = all(compare(g, tb) is Ordering.LESS for g in _e_set(a))
            if dominated != (compare(a, tb) is Ordering.LESS):
                result.fail(("below-omega-equivalence", a, b))

    sums = [t for t in terms if type(t) is Sum and t.entries]
    for s in sums:
        if compare(s.entries[0], s) is not Ordering.LESS:
            result.fail(("head-dominance", s))
    for s in sums:
        for t in sums:
            if injection_exists(s.entries, t.entries, leq) and not leq(s, t):
                result.fail(("injection-monotonicity", s, t))

    # hereditary coefficient monotonicity below Omega
    for a in below:
        for b in below:
            if not leq(a, b):
                continue
            eb = _e_set(b)
            for g in _e_set(a):
                if not any(leq(g, d) for d in eb):
                    result.fail(("hereditary-e", a, b, g))
                    break
    # the caveat: the implication may break once b reaches Omega
    witness = None
    for a in terms:
        if witness:
            break
        for b in terms:
            if compare(b, OMEGA) is Ordering.LESS or not leq(a, b):
                continue
            eb = _e_set(b)
            if any(not any(leq(g, d) for d in eb) for g in _e_set(a)):
                witness = (a, b)
                break
    result.details["caveat_witness"] = witness
    if witness is None:
        result.fail(("caveat-witness-missing",))
    return result


def check_gap_tree_order(max_size: int = 6, mset_total: int = 6, labels: int = 2,
                         budget: int | None = None) -> CheckResult:
    trees = enum_trees(labels, max_size, budget)
    result = CheckResult(
        "gap-tree-order", details={"labels": labels, "max_size": max_size, "trees": len(trees)}
    )
    mat = leq_matrix(trees)
    n = len(trees)
    if not mat.diagonal().all():
        result.fail(("reflexivity",))
    sym = mat & mat.T
    np.fill_diagonal(sym, False)
    for i, j in zip(*np.nonzero(sym)):
        result.fail(("antisymmetry", trees[i], trees[j]))
        break
    for i, j in _transitive_gap(mat)[:1]:
        result.fail(("transitivity", trees[i], trees[j]))
    heights = np.array([height(t) for t in trees])
    bad = mat & (heights[:, None] > heights[None, :])
    for i, j in zip(*np.nonzero(bad)):
        result.fail(("height-monotonicity", trees[i], trees[j]))
        break

    # multiset order on canonically sorted tuples of bounded total size
    weights = [_msize(t) for t in trees]
    msets = _bounded_multisets(list(range(n)), weights, mset_total)
    result.details["multisets"] = len(msets)
    rows = _mask_rows(mat)
    m = len(msets)
    mmat = np.zeros((m, m), dtype=bool)
    for i, s in enumerate(msets):
        for j, t in enumerate(msets):
            mmat[i, j] = _injection_by_masks(s, t, rows)
    if not mmat.diagonal().all():
        result.fail(("mset-reflexivity",))
    msym = mmat & mmat.T
    np.fill_diagonal(msym, False)
    if msym.any():
        i, j = next(zip(*np.nonzero(msym)))
        result.fail(("mset-antisymmetry", msets[i], msets[j]))
    gaps = _transitive_gap(mmat)
    if gaps:
        result.fail(("mset-transitivity", gaps[0]))
    return result


def _bounded_multisets(items, weights, max_total):
    """All weakly increasing index tuples with total weight at most max_total."""
    out = [()]
    frontier = [((), 0, 0)]
    while frontier:
        prefix, start, used = frontier.pop()
        for idx in range(start, len(items)):
            w = weights[idx]
            if used + w <= max_total:
                ext = prefix + (items[idx],)
                out.append(ext)
                frontier.append((ext, idx, used + w))
    return out


def _mask_rows(mat: np.ndarray) -> list[int]:
    rows = []
    for i in range(mat.shape[0]):
        m = 0
        for j in np.nonzero(mat[i])[0]:
            m |= 1 << int(j)
        rows.append(m)
    return rows


def _injection_by_masks(left, right, rows) -> bool:
    if len(left) > len(right):
        return False
    masks = []
    for a in left:
        row = rows[a]
        mask = 0
        for p, b in enumerate(right):
            if (row >> b) & 1:
                mask |= 1 << p
        masks.append(mask)
    owner = [-1] * len(right)

    def assign(i, seen):
        m = masks[i] & ~seen[0]
        while m:
            low = m & -m
            m ^= low
            seen[0] |= low
            j = low.bit_length() - 1
            if owner[j] < 0 or assign(owner[j], seen):
                owner[j] = i
                return True
        return False

    return all(assign(i, [0]) for i in range(len(masks)))


def check_projection_laws(max_size: int = 5, budget: int | None = None) -> CheckResult:
    result = CheckResult("projection-laws", details={"max_size": max_size})
    for n in (0, 1):
        domain, inner = nested_universe(n)
        inner_trees = enum_universe_trees(inner, max_size + 1, (), budget)
        inner_index = {t: i for i, t in enumerate(inner_trees)}
        inner_mat = leq_matrix(inner_trees)
        payloads = [t for t in inner_trees if rank(t) <= 0 and _msize(t) <= max_size]
        dom = enum_universe_trees(domain, max_size, tuple(payloads), budget)
        dom_mat = leq_matrix(dom)
        result.details[f"domain_n{n}"] = len(dom)

        images = [pi(t) for t in dom]
        for t, img in zip(dom, images):
            if pi_inverse(img, domain) != t:
                result.fail(("pi-round-trip", n, t))
        img_idx = [inner_index[t] for t in images]
        iso = inner_mat[np.ix_(img_idx, img_idx)]
        if not np.array_equal(iso, dom_mat):
            for i, j in zip(*np.nonzero(iso ^ dom_mat)):
                result.fail(("pi-order-isomorphism", n, dom[i], dom[j]))
                break

        supports = [supp(t) for t in dom]
        for s in payloads:
            si = inner_index[s]
            for t, img, sup in zip(dom, images, supports):
                lhs = inner_mat[si, inner_index[img]]
                rhs = any(inner_mat[si, inner_index[x]] for x in sup)
                if lhs != rhs:
                    result.fail(("support-law", n, s, t))
        # support members never rise above the shifted image
        for t, img, sup in zip(dom, images, supports):
            for s in sup:
                if height(s) > height(img):
                    result.fail(("support-height", n, s, t))

        weights = [_dsize(t) for t in dom]
        msets = _bounded_multisets(list(range(len(dom))), weights, max_size)
        result.details[f"multisets_n{n}"] = len(msets)
        dom_rows = _mask_rows(dom_mat)
        kappas = [kappa(tuple(dom[i] for i in ms), domain) for ms in msets]
        kap_idx = [inner_index[k] for k in kappas]
        sup_of = [
            [inner_index[x] for x in supp_multiset(tuple(dom[i] for i in ms))]
            for ms in msets
        ]
        for i, s in enumerate(msets):
            krow = inner_mat[kap_idx[i]]
            for j, t in enumerate(msets):
                lhs = inner_mat[kap_idx[i], kap_idx[j]]
                rhs = _injection_by_masks(s, t, dom_rows) or any(
                    krow[x] for x in sup_of[j]
                )
                if lhs != rhs:
                    result.fail(("kappa-law", n, s, t))
        for k in kappas:
            if rank(k) != 0:
                result.fail(("kappa-rank", n, k))
    return result


def _dsize(t) -> int:
    from .trees import deep_size

    return deep_size(t)


def check_embedding(max_len: int = 6, seed: int = 0, budget: int | None = None) -> CheckResult:
    budget = default_budget() if budget is None else budget
    terms = enum_terms(max_len)
    if len(terms) ** 2 > budget:
        terms = terms[: math.isqrt(budget)]
    ordered, rank_of = _ranked(terms)
    result = CheckResult(
        "embedding",
        details={"max_len": max_len, "items": len(terms), "pairs": len(terms) ** 2},
    )
    images = {t: embed_term(t) for t in terms}
    closure = []
    seen = set()
    for t in terms:
        for tree in (images[t], _wrap(images[t])):
            if tree not in seen:
                seen.add(tree)
                closure.append(tree)
    closure.sort(key=cmp_to_key(canonical_cmp))
    closure.sort(key=_msize)
    mat = leq_matrix(closure)
    cidx = {t: i for i, t in enumerate(closure)}
    fidx = np.array([cidx[images[t]] for t in ordered])
    emb = mat[np.ix_(fidx, fidx)]
    ranks = np.arange(len(ordered))
    lengths = np.array([length(t) for t in ordered])

    refl_bad = emb & (ranks[:, None] > ranks[None, :])
    for i, j in zip(*np.nonzero(refl_bad)):
        result.fail(("reflection", ordered[i], ordered[j]))
        break
    len_bad = emb & (lengths[:, None] > lengths[None, :])
    for i, j in zip(*np.nonzero(len_bad)):
        result.fail(("length-monotone", ordered[i], ordered[j]))
        break
    for t in terms:
        if not ebar_image_check(t):
            result.fail(("ebar-image", t))

    # strictly descending chains must embed nowhere forward
    chains = 0
    for s in range(8):
        start = ordered[-1 - (s % 5)]
        chain = descent_sampler(start, steps=30, seed=seed + s)
        chains += 1
        for i in range(len(chain)):
            for j in range(i + 1, len(chain)):
                if compare(chain[i], chain[j]) is not Ordering.GREATER:
                    result.fail(("descent-chain-order", chain[i], chain[j]))
                if tree_leq(embed_term(chain[i]), embed_term(chain[j])):
                    result.fail(("descent-chain-embedding", chain[i], chain[j]))
    result.details["descent_chains"] = chains

    preserve_gap = (~emb) & (ranks[:, None] <= ranks[None, :])
    result.details["preservation_failures"] = int(preserve_gap.sum())
    ij = np.nonzero(preserve_gap)
    if len(ij[0]):
        i, j = int(ij[0][0]), int(ij[1][0])
        result.details["preservation_example"] = (ordered[i], ordered[j])
    return result


def _wrap(tree):
    from .trees import T2

    return T2.node(1, (tree,))


def check_cset(max_len: int = 4, minimality_len: int = 3, bound: int = 7,
               budget: int | None = None) -> CheckResult:
    terms = enum_terms(max_len, budget)
    ordered, _ = _ranked(terms)
    result = CheckResult(
        "cset", details={"max_len": max_len, "items": len(terms), "bound": bound}
    )
    for g in terms:
        for a in terms:
            for b in terms:
                if c_member(g, a, b) != e_closure_check(g, a, b):
                    result.fail(("closure-equivalence", g, a, b))
    for g in terms:
        for a in terms:
            was = False
            for b in ordered:
                now = c_member(g, a, b)
                if was and not now:
                    result.fail(("monotone-in-bound", g, a, b))
                was = was or now
    for g in terms:
        for b in terms:
            was = False
            for a in ordered:
                now = c_member(g, a, b)
                if was and not now:
                    result.fail(("monotone-in-collapse-cap", g, b, a))
                was = was or now
    for a in terms:
        ta = Theta(a)
        for g in terms:
            if compare(a, g) is not Ordering.LESS:
                continue
            for d in terms:
                if c_member(a, g, d) and not c_member(ta, g, d):
                    result.fail(("collapse-introduction", a, g, d))
    for b in terms:
        for g in terms:
            if compare(b, g) is Ordering.LESS and not collapse_monotone_check(b, g):
                result.fail(("collapse-monotone", b, g))

    small = enum_terms(minimality_len)
    sweep = enum_terms(bound)
    checked = 0
    for a in small:
        ta = Theta(a)
        found = theta_conditions(a, ta, bound)
        if not found.contains_a or found.omega_trap_counterexample is not None:
            result.fail(("minimality-at-collapse", a, found))
        for g in sweep:
            if compare(g, ta) is not Ordering.LESS:
                continue
            checked += 1
            if not c_member(a, a, g):
                continue
            if not _trap_exists(a, g, sweep):
                result.fail(("minimality-below-collapse", a, g))
    result.details["minimality_candidates"] = checked
    return result


def _trap_exists(a, g, sweep) -> bool:
    # existence suffices for the audit; g itself is the common witness, so
    # try it before the full ascending scan
    if compare(g, OMEGA) is Ordering.LESS and c_member(g, a, g):
        return True
    for d in sweep:
        if (
            compare(d, OMEGA) is Ordering.LESS
            and compare(d, g) is not Ordering.LESS
            and c_member(d, a, g)
        ):
            return True
    return False


def check_arithmetic(max_len: int = 4, triple_len: int = 3, budget: int | None = None) -> CheckResult:
    terms = enum_terms(max_len, budget)
    small = enum_terms(triple_len)
    below = [t for t in small if compare(t, OMEGA) is Ordering.LESS]
    result = CheckResult(
        "arithmetic",
        details={"max_len": max_len, "triple_len": triple_len, "items": len(terms)},
    )
    for a in terms:
        if add(a, ZERO) != a or add(ZERO, a) != a:
            result.fail(("identity", a))
    for a in small:
        for b in small:
            if not leq(b, add(a, b)):
                result.fail(("right-bound", a, b))
            for c in small:
                if add(add(a, b), c) != add(a, add(b, c)):
                    result.fail(("associativity", a, b, c))
                if compare(b, c) is Ordering.LESS and compare(
                    add(a, b), add(a, c)
                ) is not Ordering.LESS:
                    result.fail(("right-strict-monotonicity", a, b, c))
    for a in terms:
        wa = omega_mul(a)
        for b in terms:
            if compare(a, b) is Ordering.LESS and compare(
                wa, omega_mul(b)
            ) is not Ordering.LESS:
                result.fail(("omega-mul-monotone", a, b))
            if compare(b, wa) is Ordering.LESS and compare(
                add(b, ONE), wa
            ) is not Ordering.LESS:
                result.fail(("omega-mul-successor", a, b))
    for b in small:
        wb = omega_exp(b)
        inside = [g for g in small if compare(g, wb) is Ordering.LESS]
        for g in inside:
            for d in inside:
                if compare(add(g, d), wb) is not Ordering.LESS:
                    result.fail(("omega-exp-additive", b, g, d))
    for a in terms:
        for b in terms:
            if compare(a, b) is Ordering.LESS and compare(
                big_omega_mul(a), big_omega_mul(b)
            ) is not Ordering.LESS:
                result.fail(("cap-mul-monotone", a, b))
    below4 = [t for t in terms if compare(t, OMEGA) is Ordering.LESS]
    for a in below4:
        for b in below4:
            if compare(veblen(a, b), OMEGA) is not Ordering.LESS:
                result.fail(("veblen-below-omega", a, b))
    for a in below:
        for b in below:
            vab = veblen(a, b)
            for c in below:
                if compare(b, c) is Ordering.LESS and compare(
                    vab, veblen(a, c)
                ) is not Ordering.LESS:
                    result.fail(("veblen-right-monotone", a, b, c))
    for a in below:
        for a2 in below:
            if compare(a, a2) is not Ordering.LESS:
                continue
            for b2 in below:
                v2 = veblen(a2, b2)
                for b in below:
                    if compare(b, v2) is Ordering.LESS and compare(
                        veblen(a, b), v2
                    ) is not Ordering.LESS:
                        result.fail(("veblen-diagonal", a, b, a2, b2))
    return result


def check_bad_sequences(max_size: int = 3, labels: int = 2, budget: int | None = None) -> CheckResult:
    result = CheckResult("bad-sequences", details={"labels": labels, "max_size": max_size})
    for size in range(1, max_size + 1):
        best, witness = longest_bad_sequence(labels, size, budget)
        naive = longest_bad_sequence_naive(labels, size, budget)
        result.details[f"size_{size}"] = best
        if best != naive:
            result.fail(("pruned-vs-naive", size, best, naive))
        if len(witness) != best:
            result.fail(("witness-length", size, len(witness), best))
        for i in range(len(witness)):
            for j in range(i + 1, len(witness)):
                if tree_leq(witness[i], witness[j]):
                    result.fail(("witness-not-bad", size, witness[i], witness[j]))
    if result.details.get("size_1") != 2:
        result.fail(("two-label-singletons", result.details.get("size_1")))
    return result


def check_round_trip(term_len: int = 6, tree_size: int = 5, budget: int | None = None) -> CheckResult:
    from .syntax import parse_term, parse_tree, print_term, print_tree

    result = CheckResult(
        "round-trip", details={"term_len": term_len, "tree_size": tree_size}
    )
    terms = enum_terms(term_len, budget)
    for t in terms:
        for style in ("canonical", "sugar"):
            back = parse_term(print_term(t, style))
            if back != t:
                result.fail(("term", style, t))
    result.details["terms"] = len(terms)
    trees = enum_trees(2, tree_size, budget)
    for t in trees:
        if parse_tree(print_tree(t), 2) != t:
            result.fail(("tree", t))
    result.details["trees"] = len(trees)
    return result


SUITES = {
    "linearity": check_linearity,
    "oracle": check_compare_oracle,
    "exercises": check_notation_exercises,
    "gaptree": check_gap_tree_order,
    "projection": check_projection_laws,
    "embedding": check_embedding,
    "cset": check_cset,
    "arith": check_arithmetic,
    "badseq": check_bad_sequences,
    "roundtrip": check_round_trip,
}
