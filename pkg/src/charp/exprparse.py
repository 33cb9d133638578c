"""Text input: field declarations, expressions, and a canonical printer.

Grammar (whitespace between tokens is ignored)::

    field   := "field" "GF" "(" INT ["^" INT] ["," NAME] ")" "(" [NAME {"," NAME}] ")"
    expr    := term {("+" | "-") term}
    term    := unary {("*" | "/") unary}
    unary   := "-" unary | power
    power   := atom {"^" INT}
    atom    := INT | NAME | "(" expr ")"

Exponents are literal nonnegative integers; juxtaposition ("2t1") is a
syntax error.  A document is a sequence of newline-separated statements:
``field ...``, ``coords a, b, ...``, ``let NAME = expr`` and ``expr expr``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from charp.errors import (
    DivisionByZero,
    ExprSyntaxError,
    NonPrimeCharacteristic,
    UnknownIdentifier,
)
from charp.exactfield.galois import GF, is_prime, prime_power
from charp.exactfield.multipoly import MultiPoly, poly_ring
from charp.exactfield.ratfunc import FieldElement, FractionField, fraction_field

MAX_EXPONENT = 4096
MAX_DEPTH = 100

_TOKEN = re.compile(r"(?P<int>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),:=])")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    column: int


def tokenize(src: str, line: int = 1) -> list[Token]:
    if isinstance(src, (bytes, bytearray)):
        try:
            src = bytes(src).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ExprSyntaxError("input is not valid UTF-8", line, exc.start + 1) from None
    toks = []
    pos = 0
    line_start = 0
    n = len(src)
    while True:
        while pos < n and src[pos] in " \t\r\n":
            if src[pos] == "\n":
                line += 1
                line_start = pos + 1
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        toks.append(Token(m.lastgroup, m.group(), line, pos - line_start + 1))
        pos = m.end()
    toks.append(Token("end", "", line, n - line_start + 1))
    return toks


# -- AST --

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str
    line: int = dc_field(default=1, compare=False)
    column: int = dc_field(default=1, compare=False)


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    line: int = dc_field(default=1, compare=False)
    column: int = dc_field(default=1, compare=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ExprSyntaxError(msg, tok.line, tok.column)

    def accept(self, text) -> Token | None:
        if self.tok.kind == "op" and self.tok.text == text:
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, text) -> Token:
        t = self.accept(text)
        if t is None:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return t

    def expect_kind(self, kind) -> Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {kind}, found {found!r}")
        t = self.tok
        self.i += 1
        return t

    def keyword(self, word) -> Token:
        if self.tok.kind != "name" or self.tok.text != word:
            raise self.error(f"expected {word!r}")
        t = self.tok
        self.i += 1
        return t

    def at_end(self) -> bool:
        return self.tok.kind == "end"

    def finish(self):
        if not self.at_end():
            raise self.error(f"unexpected {self.tok.text!r}")

    def expr(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error("expression nested too deeply")
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            t = self.tok
            self.i += 1
            node = BinOp(t.text, node, self.term(), t.line, t.column)
        self.depth -= 1
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            t = self.tok
            self.i += 1
            node = BinOp(t.text, node, self.unary(), t.line, t.column)
        return node

    def unary(self):
        if self.accept("-"):
            self.depth += 1
            if self.depth > MAX_DEPTH:
                raise self.error("expression nested too deeply")
            node = Neg(self.unary())
            self.depth -= 1
            return node
        return self.power()

    def power(self):
        node = self.atom()
        while self.accept("^"):
            t = self.tok
            if t.kind != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.i += 1
            e = int(t.text)
            if e > MAX_EXPONENT:
                raise self.error(f"exponent larger than {MAX_EXPONENT}", t)
            node = Pow(node, e)
        return node

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Num(int(t.text))
        if t.kind == "name":
            self.i += 1
            return Name(t.text, t.line, t.column)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        found = t.text or "end of input"
        raise self.error(f"expected a number, name or '(', found {found!r}")


def parse_ast(src: str, line: int = 1):
    """Syntax tree of a single expression."""
    p = _Parser(tokenize(src, line))
    node = p.expr()
    p.finish()
    return node


# -- fields --

@dataclass(frozen=True)
class FieldDecl:
    p: int
    m: int
    generators: tuple[str, ...]
    gen_name: str = "a"

    @property
    def q(self) -> int:
        return self.p**self.m

    def field(self, coords=()) -> FractionField:
        coords = tuple(coords)
        names = self.generators + coords
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if self.m > 1 and self.gen_name in names:
            raise ValueError(f"{self.gen_name!r} names the GF({self.q}) generator")
        ring = poly_ring(GF(self.p, self.m, self.gen_name), names)
        return fraction_field(ring, self.generators)

    def __str__(self):
        inner = str(self.p) if self.m == 1 else f"{self.p}^{self.m}"
        if self.m > 1 and self.gen_name != "a":
            inner += f", {self.gen_name}"
        return f"field GF({inner})({', '.join(self.generators)})"


def _parse_field_tokens(p: _Parser) -> FieldDecl:
    p.keyword("field")
    p.keyword("GF")
    p.expect("(")
    qt = p.expect_kind("int")
    q = int(qt.text)
    m = 1
    if p.accept("^"):
        mt = p.expect_kind("int")
        m = int(mt.text)
        if m < 1:
            raise ExprSyntaxError("extension degree must be >= 1", mt.line, mt.column)
        if not is_prime(q):
            raise NonPrimeCharacteristic(f"{q} is not prime")
        base, ext = q, m
    else:
        pp = prime_power(q)
        if pp is None:
            raise NonPrimeCharacteristic(f"{q} is not a prime power")
        base, ext = pp
    gen_name = "a"
    if p.accept(","):
        gen_name = p.expect_kind("name").text
    p.expect(")")
    p.expect("(")
    names = []
    if not p.accept(")"):
        while True:
            t = p.expect_kind("name")
            if t.text in names:
                raise ExprSyntaxError(f"duplicate generator {t.text!r}", t.line, t.column)
            names.append(t.text)
            if p.accept(")"):
                break
            p.expect(",")
    if ext > 1 and gen_name in names:
        raise ExprSyntaxError(f"{gen_name!r} is the GF generator", qt.line, qt.column)
    return FieldDecl(base, ext, tuple(names), gen_name)


def parse_field(src: str) -> FieldDecl:
    """``field GF(3)(t1)``, ``field GF(4)(t)``, ``field GF(2^2, w)(t1, t2)``."""
    p = _Parser(tokenize(src))
    decl = _parse_field_tokens(p)
    p.finish()
    return decl


# -- evaluation --

@dataclass
class Context:
    decl: FieldDecl
    coords: tuple[str, ...] = ()
    bindings: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.coords = tuple(self.coords)
        self.field = self.decl.field(self.coords)

    @classmethod
    def of(cls, decl, coords=()) -> Context:
        if isinstance(decl, str):
            decl = parse_field(decl if decl.lstrip().startswith("field") else "field " + decl)
        return cls(decl, tuple(coords))


def _leaf(node, ctx: Context) -> FieldElement:
    F = ctx.field
    if isinstance(node, Num):
        return F.const(node.value)
    if node.name in ctx.bindings:
        return F.embed(ctx.bindings[node.name])
    if node.name in F.ring.index:
        return F.gen(node.name)
    if F.gf.m > 1 and node.name == F.gf.gen_name:
        return F.const_code(F.gf.gen().code)
    raise UnknownIdentifier(f"unknown identifier {node.name!r} "
                            f"(line {node.line}, column {node.column})")


def _apply(node, args) -> FieldElement:
    if isinstance(node, Neg):
        return -args[0]
    if isinstance(node, Pow):
        return args[0] ** node.exponent
    a, b = args
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if b.is_zero():
        raise DivisionByZero(f"division by zero (line {node.line}, column {node.column})")
    return a / b


def _children(node) -> tuple:
    if isinstance(node, Neg):
        return (node.arg,)
    if isinstance(node, Pow):
        return (node.base,)
    if isinstance(node, BinOp):
        return (node.left, node.right)
    return ()


def evaluate(node, ctx: Context) -> FieldElement:
    """Value of a syntax tree; iterative so long operator chains cannot overflow the stack."""
    values: list = []
    stack = [(node, False)]
    while stack:
        cur, expanded = stack.pop()
        kids = _children(cur)
        if not kids:
            values.append(_leaf(cur, ctx))
        elif expanded:
            args = values[-len(kids):]
            del values[-len(kids):]
            values.append(_apply(cur, args))
        else:
            stack.append((cur, True))
            for k in reversed(kids):
                stack.append((k, False))
    return values[0]


def _context(ctx, coords) -> Context:
    if isinstance(ctx, Context):
        return ctx
    return Context.of(ctx, coords)


def parse_expr(src: str, ctx, coords=()) -> FieldElement:
    """Parse and evaluate to a canonical field element.

    ``ctx`` is a :class:`Context`, a :class:`FieldDecl` or field text.
    """
    c = _context(ctx, coords)
    return evaluate(parse_ast(src), c)


def parse_poly(src: str, ctx, coords=()) -> MultiPoly:
    v = parse_expr(src, ctx, coords)
    if not v.den.is_one():
        raise ExprSyntaxError("expected a polynomial, got a fraction", 1, 1)
    return v.num


def parse_list(src: str, ctx, coords=()) -> list[FieldElement]:
    """Comma-separated expressions."""
    c = _context(ctx, coords)
    p = _Parser(tokenize(src))
    out = [evaluate(p.expr(), c)]
    while p.accept(","):
        out.append(evaluate(p.expr(), c))
    p.finish()
    return out


def print_canonical(v) -> str:
    """Deterministic text for field elements, polynomials, points and declarations."""
    if isinstance(v, (FieldElement, MultiPoly)):
        return v.format()
    if isinstance(v, FieldDecl):
        return str(v)
    if isinstance(v, (list, tuple)):
        return ", ".join(print_canonical(x) for x in v)
    coords = getattr(v, "coords", None)
    if coords is not None:
        return "(" + " : ".join(print_canonical(c) for c in coords) + ")"
    raise TypeError(f"cannot print {type(v).__name__}")


# -- documents --

@dataclass
class Document:
    decl: FieldDecl | None = None
    coords: tuple[str, ...] = ()
    bindings: dict = dc_field(default_factory=dict)
    exprs: list = dc_field(default_factory=list)

    def context(self) -> Context:
        if self.decl is None:
            raise ExprSyntaxError("no field declaration", 1, 1)
        return Context(self.decl, self.coords, dict(self.bindings))


def parse_document(src: str) -> Document:
    """Newline-separated statements; '#' starts a comment."""
    doc = Document()
    ctx = None
    for lineno, raw in enumerate(src.split("\n"), 1):
        text = raw.split("#", 1)[0]
        toks = tokenize(text, lineno)
        if toks[0].kind == "end":
            continue
        p = _Parser(toks)
        head = toks[0]
        if head.kind != "name":
            raise ExprSyntaxError("expected a statement keyword", lineno, head.column)
        if head.text == "field":
            if doc.decl is not None:
                raise ExprSyntaxError("field declared twice", lineno, head.column)
            doc.decl = _parse_field_tokens(p)
            p.finish()
            ctx = doc.context()
        elif head.text == "coords":
            if doc.decl is None:
                raise ExprSyntaxError("coords before field", lineno, head.column)
            if doc.coords or doc.exprs or doc.bindings:
                raise ExprSyntaxError("coords must directly follow field", lineno, head.column)
            p.i += 1
            names = [p.expect_kind("name").text]
            while p.accept(","):
                names.append(p.expect_kind("name").text)
            p.finish()
            try:
                doc.coords = tuple(names)
                ctx = doc.context()
            except ValueError as exc:
                raise ExprSyntaxError(str(exc), lineno, head.column) from None
        elif head.text in ("let", "expr"):
            if ctx is None:
                raise ExprSyntaxError(f"{head.text} before field", lineno, head.column)
            p.i += 1
            name = None
            if head.text == "let":
                nt = p.expect_kind("name")
                name = nt.text
                if name in ctx.field.ring.index:
                    raise ExprSyntaxError(f"{name!r} is already a variable", lineno, nt.column)
                p.expect("=")
            node = p.expr()
            p.finish()
            value = evaluate(node, ctx)
            if name is None:
                doc.exprs.append(value)
            else:
                doc.bindings[name] = value
                ctx.bindings[name] = value
        else:
            raise ExprSyntaxError(f"unknown statement {head.text!r}", lineno, head.column)
    return doc
