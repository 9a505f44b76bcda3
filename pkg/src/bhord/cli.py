"""Command-line interface.

One verb per public operation plus a ``check`` verb bundling the invariant
suites.  Results go to stdout, diagnostics to stderr.  Exit codes: 0 on
success or a passing suite, 1 on a property violation or domain error, 2 on
usage or parse errors.  ``--json`` switches to a stable machine schema
``{"schema": 1, "verb": ..., "inputs": ..., "result": ..., "diagnostics": ...}``;
``--out FILE`` additionally dumps that object as plain JSON.
"""

import argparse
import json
import sys

from .arith import add, big_omega_mul, omega_exp, omega_mul, veblen
from .cset import c_member, theta_conditions
from .embed import embed_term
from .enumeration import (
    enum_terms,
    enum_trees,
    longest_bad_sequence,
)
from .errors import DomainError, ResourceLimit, UniverseMismatch
from .checks import SUITES
from .syntax import ParseError, parse_term, parse_tree, parse_tree_list, print_term, print_tree
from .terms import Ordering, OrdinalTerm, ValidationReport, compare, e_parts, length, validate
from .trees import ebar, kappa, multiset_leq, pi, supp, tree_leq

SCHEMA_VERSION = 1

_ORDER_SYMBOL = {Ordering.LESS: "<", Ordering.EQUAL: "=", Ordering.GREATER: ">"}


class _Violation(Exception):
    """Domain-level failure: carries the message for exit code 1."""


def _valid_term(text: str) -> OrdinalTerm:
    outcome = validate(parse_term(text))
    if isinstance(outcome, ValidationReport):
        raise _Violation(f"invalid term {text!r}: {outcome.describe()}")
    return outcome


def _render(value):
    if isinstance(value, OrdinalTerm):
        return print_term(value)
    if isinstance(value, Ordering):
        return _ORDER_SYMBOL[value]
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    if isinstance(value, dict):
        return {k: _render(v) for k, v in value.items()}
    if value is None or isinstance(value, (int, str)):
        return value
    return print_tree(value) if hasattr(value, "universe") else str(value)


def _human(value) -> str:
    rendered = _render(value)
    if isinstance(rendered, list):
        return "\n".join(str(x) for x in rendered)
    if isinstance(rendered, dict):
        parts = []
        for k, v in rendered.items():
            if isinstance(v, list):
                v = "[" + ",".join(str(x) for x in v) + "]"
            elif v is None:
                v = "none"
            parts.append(f"{k}={v}")
        return " ".join(parts)
    return str(rendered)


def _cmd_validate(args):
    outcome = validate(parse_term(args.term))
    if isinstance(outcome, ValidationReport):
        return outcome.describe(), 1
    return "valid", 0


def _cmd_cmp(args):
    return compare(_valid_term(args.left), _valid_term(args.right)), 0


def _cmd_add(args):
    return add(_valid_term(args.left), _valid_term(args.right)), 0


def _cmd_wmul(args):
    return omega_mul(_valid_term(args.term)), 0


def _cmd_wexp(args):
    return omega_exp(_valid_term(args.term)), 0


def _cmd_big_omul(args):
    return big_omega_mul(_valid_term(args.term)), 0


def _cmd_veblen(args):
    return veblen(_valid_term(args.left), _valid_term(args.right)), 0


def _cmd_eparts(args):
    return list(e_parts(_valid_term(args.term))), 0


def _cmd_len(args):
    return length(parse_term(args.term)), 0


def _cmd_embed(args):
    return embed_term(_valid_term(args.term)), 0


def _cmd_tleq(args):
    return tree_leq(parse_tree(args.left, args.n), parse_tree(args.right, args.n)), 0


def _cmd_mleq(args):
    return (
        multiset_leq(parse_tree_list(args.left, args.n), parse_tree_list(args.right, args.n)),
        0,
    )


def _cmd_pi(args):
    return pi(parse_tree(args.tree, args.n, nested=True)), 0


def _cmd_kappa(args):
    from .trees import nested_universe

    sigma = parse_tree_list(args.multiset, args.n, nested=True)
    return kappa(sigma, nested_universe(args.n)[0]), 0


def _cmd_supp(args):
    return list(supp(parse_tree(args.tree, args.n, nested=True))), 0


def _cmd_ebar(args):
    return list(ebar(parse_tree(args.tree, 2))), 0


def _cmd_cset(args):
    return (
        c_member(_valid_term(args.term), _valid_term(args.cap), _valid_term(args.base)),
        0,
    )


def _cmd_theta_cond(args):
    report = theta_conditions(_valid_term(args.cap), _valid_term(args.candidate), args.bound)
    return (
        {
            "contains_a": report.contains_a,
            "counterexample": report.omega_trap_counterexample,
        },
        0,
    )


def _cmd_enum_terms(args):
    return list(enum_terms(args.max_len, args.budget)), 0


def _cmd_enum_trees(args):
    return list(enum_trees(args.n, args.max_size, args.budget)), 0


def _cmd_bad_seq(args):
    best, witness = longest_bad_sequence(args.n, args.max_size, args.budget)
    return {"length": best, "witness": witness}, 0


_SUITE_BOUNDS = {
    "linearity": ("max_len", "seed"),
    "oracle": ("max_len",),
    "exercises": ("max_len",),
    "gaptree": ("max_size",),
    "projection": ("max_size",),
    "embedding": ("max_len", "seed"),
    "cset": ("max_len",),
    "arith": ("max_len",),
    "badseq": ("max_size",),
    "roundtrip": (),
}


def _cmd_check(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    lines = []
    code = 0
    for name in names:
        kwargs = {"budget": args.budget}
        for key in _SUITE_BOUNDS[name]:
            value = getattr(args, key, None)
            if value is not None:
                kwargs[key] = value
        outcome = SUITES[name](**kwargs)
        lines.append(outcome.line())
        if not outcome.passed:
            code = 1
    return lines, code


_HANDLERS = {
    "validate": _cmd_validate,
    "cmp": _cmd_cmp,
    "add": _cmd_add,
    "wmul": _cmd_wmul,
    "wexp": _cmd_wexp,
    "Omul": _cmd_big_omul,
    "veblen": _cmd_veblen,
    "eparts": _cmd_eparts,
    "len": _cmd_len,
    "embed": _cmd_embed,
    "tleq": _cmd_tleq,
    "mleq": _cmd_mleq,
    "pi": _cmd_pi,
    "kappa": _cmd_kappa,
    "supp": _cmd_supp,
    "ebar": _cmd_ebar,
    "cset": _cmd_cset,
    "theta-cond": _cmd_theta_cond,
    "enum-terms": _cmd_enum_terms,
    "enum-trees": _cmd_enum_trees,
    "bad-seq": _cmd_bad_seq,
    "check": _cmd_check,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine schema")
    common.add_argument("--out", metavar="FILE", help="also dump the JSON report to FILE")
    common.add_argument("--budget", type=int, default=None, help="enumeration item cap")

    parser = argparse.ArgumentParser(
        prog="bhord",
        description="Workbench for the Bachmann-Howard notation and gap-condition trees",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def cmd(name, *names_help, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        for arg_name, arg_help in names_help:
            p.add_argument(arg_name, help=arg_help)
        return p

    cmd("validate", ("term", "raw term text"))
    cmd("cmp", ("left", "term"), ("right", "term"))
    cmd("add", ("left", "term"), ("right", "term"))
    cmd("wmul", ("term", "term"))
    cmd("wexp", ("term", "term"))
    cmd("Omul", ("term", "term"))
    cmd("veblen", ("left", "term below W"), ("right", "term below W"))
    cmd("eparts", ("term", "term"))
    cmd("len", ("term", "raw term text"))
    cmd("embed", ("term", "term"))
    for name, args in (
        ("tleq", (("left", "tree"), ("right", "tree"))),
        ("mleq", (("left", "tree multiset"), ("right", "tree multiset"))),
        ("pi", (("tree", "nested tree"),)),
        ("kappa", (("multiset", "nested tree multiset"),)),
        ("supp", (("tree", "nested tree"),)),
    ):
        p = cmd(name, *args)
        p.add_argument("--n", type=int, required=True, help="number of labels")
    cmd("ebar", ("tree", "tree over two labels"))
    cmd("cset", ("term", "candidate member"), ("cap", "collapse cap"), ("base", "base bound"))
    p = cmd("theta-cond", ("cap", "collapse argument"), ("candidate", "candidate value"))
    p.add_argument("--bound", type=int, default=7, help="search length bound")
    p = cmd("enum-terms")
    p.add_argument("max_len", type=int)
    p = cmd("enum-trees")
    p.add_argument("n", type=int)
    p.add_argument("max_size", type=int)
    p = cmd("bad-seq")
    p.add_argument("n", type=int)
    p.add_argument("max_size", type=int)
    p = cmd("check")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-len", dest="max_len", type=int, default=None)
    p.add_argument("--max-size", dest="max_size", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    inputs = {k: v for k, v in vars(args).items() if k not in ("verb", "json", "out")}
    diagnostics: list[str] = []
    try:
        result, code = _HANDLERS[args.verb](args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except (DomainError, UniverseMismatch, ResourceLimit, _Violation) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    payload = {
        "schema": SCHEMA_VERSION,
        "verb": args.verb,
        "inputs": {k: v for k, v in inputs.items() if v is not None},
        "result": _render(result),
        "diagnostics": diagnostics,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(_human(result))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
    return code


if __name__ == "__main__":
    sys.exit(main())
