"""Text grammar for terms and trees, with printers that round-trip.

Term grammar (whitespace insignificant, LL(1)):

    term := "W" | "w" | nat | "t" "(" term ")" | "[" [term ("," term)*] "]"

``W`` is the distinguished uncountable constant, ``w`` sugars the least
infinite ordinal, a bare natural sugars the numeral of that many zeros.
Parsing yields a raw term; validity is a separate decision.

Tree grammar over a universe with n labels:

    tree := nat "*" "[" [tree ("," tree)*] "]"

For nested universes (inputs of the projection maps) a leaf payload is
written in braces: ``{tree}``, where the payload is a rank-zero tree over
n+1 labels.
"""

from dataclasses import dataclass

from .terms import OMEGA, OrdinalTerm, RawTerm, Sum, Theta, _Omega, numeral
from .trees import EMPTY, GapTree, Leaf, Universe, nested_universe


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan, expected: tuple[str, ...] = ()):
        hint = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at {span.start}..{span.end}{hint}")
        self.span = span
        self.expected = expected


class LabelOutOfRange(ParseError):
    pass


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def here(self) -> SourceSpan:
        return SourceSpan(self.pos, min(self.pos + 1, len(self.text)))

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"unexpected {self.peek()!r}", self.here(), (repr(ch),))
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", self.here(), ("digit",))
        return int(self.text[start : self.pos])

    def done(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("trailing input", SourceSpan(self.pos, len(self.text)))


def parse_term(text: str) -> RawTerm:
    """Parse the term grammar; the result is raw and still needs validation."""
    sc = _Scanner(text)
    t = _term(sc)
    sc.done()
    return t


def _term(sc: _Scanner) -> RawTerm:
    ch = sc.peek()
    if ch == "W":
        sc.take("W")
        return OMEGA
    if ch == "w":
        sc.take("w")
        return Sum((numeral(1),))
    if ch.isdigit():
        return numeral(sc.nat())
    if ch == "t":
        sc.take("t")
        sc.take("(")
        inner = _term(sc)
        sc.take(")")
        return Theta(inner)
    if ch == "[":
        sc.take("[")
        entries = []
        if sc.peek() != "]":
            entries.append(_term(sc))
            while sc.peek() == ",":
                sc.take(",")
                entries.append(_term(sc))
        sc.take("]")
        return Sum(tuple(entries))
    raise ParseError(
        f"unexpected {ch!r}" if ch else "unexpected end of input",
        sc.here(),
        ("W", "w", "t(", "[", "digit"),
    )


def print_term(a: RawTerm, style: str = "canonical") -> str:
    if style not in ("canonical", "sugar"):
        raise ValueError(f"unknown style {style!r}")
    return _print_term(a, sugar=style == "sugar")


def _print_term(a: RawTerm, sugar: bool) -> str:
    if type(a) is _Omega:
        return "W"
    if type(a) is Theta:
        return f"t({_print_term(a.arg, sugar)})"
    if sugar:
        if all(e == Sum() for e in a.entries):
            return str(len(a.entries))
        if a == Sum((numeral(1),)):
            return "w"
    if not a.entries:
        return "0"
    return "[" + ",".join(_print_term(e, sugar) for e in a.entries) + "]"


def parse_tree(text: str, n: int, nested: bool = False) -> GapTree:
    """Parse a tree over n labels; with ``nested`` leaves in braces are allowed."""
    sc = _Scanner(text)
    t = _tree(sc, _tree_universe(n, nested), nested)
    sc.done()
    return t


def parse_tree_list(text: str, n: int, nested: bool = False) -> tuple[GapTree, ...]:
    """Parse a bracketed multiset of trees over n labels."""
    sc = _Scanner(text)
    universe = _tree_universe(n, nested)
    sc.take("[")
    items = []
    if sc.peek() != "]":
        items.append(_tree(sc, universe, nested))
        while sc.peek() == ",":
            sc.take(",")
            items.append(_tree(sc, universe, nested))
    sc.take("]")
    sc.done()
    return tuple(items)


def _tree_universe(n: int, nested: bool) -> Universe:
    return nested_universe(n)[0] if nested else Universe(n, EMPTY)


def _tree(sc: _Scanner, universe: Universe, nested: bool) -> GapTree:
    ch = sc.peek()
    if nested and ch == "{":
        sc.take("{")
        inner = universe.alphabet.universe
        payload = _tree(sc, inner, False)
        sc.take("}")
        return universe.leaf(payload)
    start = sc.pos
    label = sc.nat()
    if label >= universe.width:
        raise LabelOutOfRange(
            f"label {label} out of range for {universe.width} labels",
            SourceSpan(start, sc.pos),
        )
    sc.take("*")
    sc.take("[")
    children = []
    if sc.peek() != "]":
        children.append(_tree(sc, universe, nested))
        while sc.peek() == ",":
            sc.take(",")
            children.append(_tree(sc, universe, nested))
    sc.take("]")
    return universe.node(label, tuple(children))


def print_tree(t: GapTree) -> str:
    """Canonical tree text; children appear in storage order."""
    if type(t) is Leaf:
        if isinstance(t.payload, GapTree):
            return "{" + print_tree(t.payload) + "}"
        if isinstance(t.payload, OrdinalTerm):
            return "{" + print_term(t.payload) + "}"
        return "{" + repr(t.payload) + "}"
    return f"{t.label}*[" + ",".join(print_tree(c) for c in t.children) + "]"
