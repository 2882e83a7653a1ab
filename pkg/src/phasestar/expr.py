"""Expression language for the command line.

Grammar (ASCII only):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'

Known names: q, p, i, hbar and generator symbols e1, e2, ...  Values lower
to multivectors; '*' between generator symbols is the Grassmann (wedge)
product, so 'e2*e1' means -e1e2.  Division is restricted to nonzero constant
divisors, which is all the canonical renderings ever need.  Exponents must
be nonnegative integer literals.

Rendering of polynomials and multivectors lives on the value types; for any
canonical rendering r of a polynomial, parse_poly(r) returns the original
value (exact round trip).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .multivector import Metric, Multivector
from .phasepoly import PhasePoly
from .scalars import GaussianRational


class ExprError(ValueError):
    """Problem with an input expression, annotated with a byte offset."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected: {', '.join(self.expected)})"
        super().__init__(detail)


class ParseError(ExprError):
    """Lexical or syntactic error."""


class LowerError(ExprError):
    """Structurally valid expression that does not denote a value here."""


# -- tokens -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")

_KNOWN_NAMES = {"q", "p", "i", "hbar"}
_GEN_RE = re.compile(r"e([1-9]\d*)$")


@dataclass(frozen=True)
class Token:
    kind: str  # 'int' | 'name' | one of '+-*/^()' | 'end'
    text: str
    position: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            stripped = source[pos:].lstrip()
            if not stripped:
                break
            bad_pos = len(source) - len(stripped)
            raise ParseError(f"unexpected character {source[bad_pos]!r}", bad_pos)
        if match.lastgroup == "int":
            tokens.append(Token("int", match.group("int"), match.start("int")))
        elif match.lastgroup == "name":
            tokens.append(Token("name", match.group("name"), match.start("name")))
        else:
            tokens.append(Token(match.group("op"), match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


# -- syntax tree ---------------------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int
    position: int


@dataclass(frozen=True)
class NameRef:
    name: str
    position: int


@dataclass(frozen=True)
class Unary:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*', '/'
    left: "Node"
    right: "Node"
    position: int


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int
    position: int


Node = IntLit | NameRef | Unary | BinOp | Power


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def parse(self) -> Node:
        node = self.expr()
        if self.current.kind != "end":
            raise ParseError(
                f"unexpected {self.current.text!r}",
                self.current.position,
                ("+", "-", "*", "/", "end of input"),
            )
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.current.kind in ("+", "-"):
            op = self.advance()
            node = BinOp(op.kind, node, self.term(), op.position)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.current.kind in ("*", "/"):
            op = self.advance()
            node = BinOp(op.kind, node, self.unary(), op.position)
        return node

    def unary(self) -> Node:
        if self.current.kind == "-":
            self.advance()
            return Unary(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.current.kind != "^":
            return base
        caret = self.advance()
        token = self.current
        if token.kind == "-":
            raise ParseError("negative exponent", token.position, ("nonnegative integer",))
        if token.kind != "int":
            raise ParseError(
                "exponent must be a nonnegative integer literal",
                token.position,
                ("nonnegative integer",),
            )
        self.advance()
        return Power(base, int(token.text), caret.position)

    def atom(self) -> Node:
        token = self.current
        if token.kind == "int":
            self.advance()
            return IntLit(int(token.text), token.position)
        if token.kind == "name":
            self.advance()
            return NameRef(token.text, token.position)
        if token.kind == "(":
            self.advance()
            node = self.expr()
            if self.current.kind != ")":
                raise ParseError("unbalanced parenthesis", self.current.position, (")",))
            self.advance()
            return node
        raise ParseError(
            f"unexpected {token.text!r}" if token.kind != "end" else "unexpected end of input",
            token.position,
            ("number", "identifier", "("),
        )


def parse(source: str) -> Node:
    """Parse a source string into a syntax tree."""
    return _Parser(tokenize(source)).parse()


# -- lowering ------------------------------------------------------------------


def _lower(node: Node, metric: Metric, allow_generators: bool) -> Multivector:
    if isinstance(node, IntLit):
        return Multivector.scalar(metric, node.value)
    if isinstance(node, NameRef):
        name = node.name
        if name == "q":
            return Multivector.scalar(metric, PhasePoly.var_q())
        if name == "p":
            return Multivector.scalar(metric, PhasePoly.var_p())
        if name == "i":
            return Multivector.scalar(metric, PhasePoly.i())
        if name == "hbar":
            return Multivector.scalar(metric, PhasePoly.hbar())
        gen = _GEN_RE.match(name)
        if gen:
            index = int(gen.group(1))
            if not allow_generators:
                raise LowerError(
                    f"generator symbol {name!r} is not allowed here", node.position
                )
            if index > metric.dim:
                raise LowerError(
                    f"generator {name!r} exceeds dimension {metric.dim}", node.position
                )
            return Multivector.generator(metric, index)
        raise LowerError(
            f"unknown identifier {name!r}",
            node.position,
            ("q", "p", "i", "hbar", "e1..e{dim}"),
        )
    if isinstance(node, Unary):
        return -_lower(node.operand, metric, allow_generators)
    if isinstance(node, Power):
        base = _lower(node.base, metric, allow_generators)
        result = Multivector.scalar(metric, 1)
        for _ in range(node.exponent):
            result = result.wedge(base)
        return result
    if isinstance(node, BinOp):
        left = _lower(node.left, metric, allow_generators)
        right = _lower(node.right, metric, allow_generators)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left.wedge(right)
        # division: the divisor must be a nonzero constant scalar
        constant = _as_constant(right)
        if constant is None or constant.is_zero():
            raise LowerError(
                "divisor must be a nonzero constant", node.position
            )
        return left / constant
    raise TypeError(f"unhandled node {node!r}")


def _as_constant(value: Multivector) -> GaussianRational | None:
    """The value as a plain Gaussian rational, or None if it is not one."""
    if value.is_zero():
        return GaussianRational(0)
    if set(value._terms) != {0}:
        return None
    poly = value.scalar_part()
    items = poly.items()
    if len(items) != 1 or items[0][0] != (0, 0):
        return None
    scalar = items[0][1]
    if not scalar.is_hbar_free():
        return None
    return scalar.coefficient(0)


def parse_multivector(source: str, dim: int = 2, metric: Metric | None = None) -> Multivector:
    """Parse an expression over q, p, i, hbar, e1..edim into a multivector."""
    metric = metric or Metric.euclidean(dim)
    return _lower(parse(source), metric, allow_generators=True)


def parse_poly(source: str) -> PhasePoly:
    """Parse a pure phase-space expression (no generator symbols)."""
    value = _lower(parse(source), Metric.euclidean(2), allow_generators=False)
    return value.scalar_part()
