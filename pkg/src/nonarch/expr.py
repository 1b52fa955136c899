"""Expression language: tokenizer, recursive-descent parser and printer.

Grammar (loosest binding first)::

    expr  := sum (relop sum)?
    sum   := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' exponent)?          exponent folds to an integer
    atom  := number | 'w' | 'eps' | ident '(' expr (',' expr)* ')' | '(' expr ')'

``eps`` is desugared to ``1 / w`` while parsing.  Decimal literals become
exact rationals; ``a/b`` is ordinary division of two integer literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegreeLimit, IntegerExponentRequired, ParseError

RELOPS = ("<", "<=", "==", ">=", ">")
MAX_EXPONENT = 10**6

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<number>\d+(?:\.\d*)?|\.\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op><=|>=|==|[-+*/^(),<>])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "ident", "op", "end"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1, ()
            )
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    out.append(Token("end", "", line, pos - line_start + 1))
    return out


# -- AST -------------------------------------------------------------------
# ``line``/``column`` are excluded from equality so that parse(print(e)) == e.


@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class Num(Node):
    value: Fraction
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Omega(Node):
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp(Node):
    op: str  # + - * /
    left: Node
    right: Node
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Compare(Node):
    op: str
    left: Node
    right: Node
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


_ATOM_START = ("number", "'w'", "'eps'", "identifier", "'('")
_OPERAND_START = ("'-'",) + _ATOM_START


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        t = self.tok
        return t.kind == "op" and t.text in ops

    def fail(self, expected) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        exp = tuple(expected)
        return ParseError(f"unexpected {found}; expected {' or '.join(exp)}", t.line, t.column, exp)

    def expect(self, op: str) -> Token:
        if not self.at_op(op):
            raise self.fail((f"'{op}'",))
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            allowed = ["end of input", "'+'", "'-'", "'*'", "'/'"]
            if not isinstance(node, Compare):
                allowed += [f"'{r}'" for r in RELOPS]
            raise self.fail(allowed)
        return node

    def expr(self) -> Node:
        left = self.sum()
        if self.tok.kind == "op" and self.tok.text in RELOPS:
            t = self.advance()
            right = self.sum()
            return Compare(t.text, left, right, t.line, t.column)
        return left

    def sum(self) -> Node:
        left = self.term()
        while self.at_op("+", "-"):
            t = self.advance()
            left = BinOp(t.text, left, self.term(), t.line, t.column)
        return left

    def term(self) -> Node:
        left = self.unary()
        while self.at_op("*", "/"):
            t = self.advance()
            left = BinOp(t.text, left, self.unary(), t.line, t.column)
        return left

    def unary(self) -> Node:
        if self.at_op("-"):
            t = self.advance()
            return Neg(self.unary(), t.line, t.column)
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.at_op("^"):
            t = self.advance()
            start = self.tok
            n = self.exponent()
            if n is None:
                raise IntegerExponentRequired(
                    "exponent must be an integer constant", start.line, start.column, ("integer",)
                )
            return Pow(base, n, t.line, t.column)
        return base

    def exponent(self) -> int | None:
        """Parse a signed exponent operand and fold it to an int (right-assoc ``^``)."""
        if self.at_op("-"):
            self.advance()
            v = self.exponent()
            return None if v is None else -v
        node = self.atom()
        v = _fold_int(node)
        if self.at_op("^"):
            self.advance()
            e = self.exponent()
            if v is None or e is None:
                return None
            if e < 0:
                if abs(v) != 1:
                    return None
                e = -e
            if abs(v) > 1 and e > 64:
                raise DegreeLimit("exponent tower is too large", self.tok.line, self.tok.column)
            v = v**e
        if v is not None and abs(v) > MAX_EXPONENT:
            raise DegreeLimit(f"exponent {v} is too large", self.tok.line, self.tok.column)
        return v

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "number":
            self.advance()
            return Num(Fraction(t.text), t.line, t.column)
        if t.kind == "ident":
            self.advance()
            if t.text == "w":
                return Omega(t.line, t.column)
            if t.text == "eps":
                return BinOp("/", Num(Fraction(1), t.line, t.column), Omega(t.line, t.column), t.line, t.column)
            if not self.at_op("("):
                raise self.fail(("'('",))
            self.advance()
            args = [self.expr()]
            while self.at_op(","):
                self.advance()
                args.append(self.expr())
            if not self.at_op(")"):
                raise self.fail(("','", "')'"))
            self.advance()
            return Call(t.text, tuple(args), t.line, t.column)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise self.fail(_OPERAND_START if t.kind != "op" or t.text != "-" else _ATOM_START)


def _fold_int(node: Node) -> int | None:
    if isinstance(node, Num):
        return node.value.numerator if node.value.denominator == 1 else None
    if isinstance(node, Neg):
        v = _fold_int(node.operand)
        return None if v is None else -v
    if isinstance(node, Pow):
        v = _fold_int(node.base)
        if v is None or node.exponent < 0 and abs(v) != 1:
            return None
        return v ** abs(node.exponent)
    return None


def parse(text: str) -> Node:
    """Parse ``text`` into an AST; raises ``ParseError`` with line/column."""
    return _Parser(text).parse()


# -- printer ---------------------------------------------------------------

_PREC = {"cmp": 1, "+": 2, "-": 2, "*": 3, "/": 3, "neg": 4, "^": 5, "atom": 6}


def _prec(node: Node) -> int:
    if isinstance(node, Compare):
        return _PREC["cmp"]
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _PREC["neg"]
    if isinstance(node, Pow):
        return _PREC["^"]
    return _PREC["atom"]


def _fmt_num(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    # parser-produced literals are decimals, so some power of ten clears the denominator
    for digits in range(1, 64):
        scaled = q * 10**digits
        if scaled.denominator == 1:
            s = str(scaled.numerator).rjust(digits + 1, "0")
            return s[:-digits] + "." + s[-digits:]
    return f"({q.numerator}/{q.denominator})"


def to_text(node: Node) -> str:
    """Print with the fewest parentheses that preserve the tree."""

    def wrap(child: Node, min_prec: int) -> str:
        s = to_text(child)
        return f"({s})" if _prec(child) < min_prec else s

    if isinstance(node, Num):
        return _fmt_num(node.value)
    if isinstance(node, Omega):
        return "w"
    if isinstance(node, Neg):
        return "-" + wrap(node.operand, _PREC["neg"])
    if isinstance(node, Pow):
        return f"{wrap(node.base, _PREC['atom'])}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        return f"{wrap(node.left, p)} {node.op} {wrap(node.right, p + 1)}"
    if isinstance(node, Compare):
        return f"{wrap(node.left, 2)} {node.op} {wrap(node.right, 2)}"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_text(a) for a in node.args)})"
    raise TypeError(f"not an expression node: {node!r}")
