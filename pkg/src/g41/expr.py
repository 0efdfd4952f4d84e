"""A small expression language for multivectors.

Grammar, loosest binding first::

    sum     := product (("+" | "-") product)*
    product := wedge ("*" wedge)*
    wedge   := unary (("^" | "|") unary)*
    unary   := "-" unary | postfix
    postfix := primary "~"*
    primary := NUMBER | BLADE | "i" | "(" sum ")" | "exp" "(" sum ")"
             | "<" sum ">" DIGIT

``^`` (outer) and ``|`` (inner) bind tighter than ``*`` (geometric).
NUMBER is a decimal (optionally with exponent), an integer or a rational
``p/q``.  An expression made only of integers, rationals and blades
evaluates with exact Fraction coefficients; a decimal literal or ``exp``
anywhere makes the whole evaluation float.
BLADE is ``e`` followed by 1-5 strictly increasing digits from 0-4.  There
is no division operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import CANONICAL_ORDER, I, Blade, Multivector, exp_scalar_square, grade_project
from .errors import ExprSyntaxError, InvalidBlade

# each nesting level costs about six Python frames
MAX_DEPTH = 100


@dataclass(frozen=True)
class Num:
    value: float | Fraction
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BladeLit:
    generators: tuple[int, ...]
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Rev:
    operand: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    arg: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class GradeSel:
    operand: object
    k: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Token:
    kind: str  # num, blade, ident, op, end
    text: str
    pos: int  # character index
    value: object = None


_OPS = set("+-*^|~()<>")


def _tokenize(src: str) -> list[Token]:
    out = []
    k = 0
    n = len(src)
    while k < n:
        c = src[k]
        if c.isspace():
            k += 1
            continue
        if c in _OPS:
            out.append(Token("op", c, k))
            k += 1
            continue
        if c.isascii() and c.isdigit():
            out.append(_number(src, k))
            k += len(out[-1].text)
            continue
        if c.isascii() and (c.isalpha() or c == "_"):
            start = k
            while k < n and src[k].isascii() and (src[k].isalnum() or src[k] == "_"):
                k += 1
            word = src[start:k]
            if word[0] == "e" and len(word) > 1 and word[1:].isdigit():
                out.append(Token("blade", word, start, _blade_generators(src, word, start)))
            elif word in ("i", "exp"):
                out.append(Token("ident", word, start))
            else:
                raise ExprSyntaxError(f"unknown name {word!r}", _byte_offset(src, start), {"number", "blade", "i", "exp", "("})
            continue
        raise ExprSyntaxError(f"unexpected character {c!r}", _byte_offset(src, k), {"number", "blade", "operator"})
    out.append(Token("end", "", n))
    return out


def _number(src: str, start: int) -> Token:
    k = start
    n = len(src)

    def digits(k):
        while k < n and src[k].isascii() and src[k].isdigit():
            k += 1
        return k

    k = digits(k)
    # rational literal p/q
    if k + 1 < n and src[k] == "/" and src[k + 1].isascii() and src[k + 1].isdigit():
        end = digits(k + 1)
        num, den = int(src[start:k]), int(src[k + 1 : end])
        if den == 0:
            raise ExprSyntaxError("zero denominator in rational literal", _byte_offset(src, k + 1))
        return Token("num", src[start:end], start, Fraction(num, den))
    if k + 1 < n and src[k] == "." and src[k + 1].isascii() and src[k + 1].isdigit():
        k = digits(k + 1)
    if k < n and src[k] in "eE":
        j = k + 1
        if j < n and src[j] in "+-":
            j += 1
        if j < n and src[j].isascii() and src[j].isdigit():
            k = digits(j)
    text = src[start:k]
    # integers stay exact; any decimal literal turns the evaluation to float
    value = Fraction(int(text)) if text.isdigit() else float(text)
    return Token("num", text, start, value)


def _blade_generators(src: str, word: str, pos: int) -> tuple[int, ...]:
    digits = word[1:]
    gens = tuple(int(d) for d in digits)
    offset = _byte_offset(src, pos)
    if len(gens) > 5 or any(g > 4 for g in gens):
        raise InvalidBlade(f"invalid blade {word!r}: digits must be in 0-4", offset)
    if any(a >= b for a, b in zip(gens, gens[1:])):
        raise InvalidBlade(f"invalid blade {word!r}: digits must be strictly increasing", offset)
    return gens


def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.k = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def fail(self, message, expected):
        raise ExprSyntaxError(message, _byte_offset(self.src, self.tok.pos), expected)

    def expect(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            return self.advance()
        found = self.tok.text or "end of input"
        self.fail(f"unexpected {found!r}", {text})

    def is_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.fail("expression nested too deeply", ())

    def sum(self):
        node = self.product()
        while self.is_op("+", "-"):
            t = self.advance()
            node = BinOp(t.text, node, self.product(), t.pos)
        return node

    def product(self):
        node = self.wedge()
        while self.is_op("*"):
            t = self.advance()
            node = BinOp("*", node, self.wedge(), t.pos)
        return node

    def wedge(self):
        node = self.unary()
        while self.is_op("^", "|"):
            t = self.advance()
            node = BinOp(t.text, node, self.unary(), t.pos)
        return node

    def unary(self):
        if self.is_op("-"):
            t = self.advance()
            self.enter()
            node = Neg(self.unary(), t.pos)
            self.depth -= 1
            return node
        return self.postfix()

    def postfix(self):
        node = self.primary()
        while self.is_op("~"):
            t = self.advance()
            node = Rev(node, t.pos)
        return node

    def primary(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(t.value, t.pos)
        if t.kind == "blade":
            self.advance()
            return BladeLit(t.value, t.pos)
        if t.kind == "ident" and t.text == "i":
            self.advance()
            return BladeLit((0, 1, 2, 3, 4), t.pos)
        if t.kind == "ident" and t.text == "exp":
            self.advance()
            self.expect("(")
            self.enter()
            arg = self.sum()
            self.depth -= 1
            self.expect(")")
            return Call("exp", arg, t.pos)
        if self.is_op("("):
            self.advance()
            self.enter()
            node = self.sum()
            self.depth -= 1
            self.expect(")")
            return node
        if self.is_op("<"):
            self.advance()
            self.enter()
            node = self.sum()
            self.depth -= 1
            self.expect(">")
            g = self.tok
            if g.kind != "num" or not g.text.isdigit() or len(g.text) != 1 or int(g.text) > 5:
                self.fail("grade selection needs a single digit 0-5", {"0", "1", "2", "3", "4", "5"})
            self.advance()
            return GradeSel(node, int(g.text), t.pos)
        found = t.text or "end of input"
        self.fail(f"unexpected {found!r}", {"number", "blade", "i", "exp", "(", "<", "-"})


def parse(src: str):
    """Parse ``src`` into an AST; raises ExprSyntaxError / InvalidBlade."""
    p = _Parser(src)
    try:
        node = p.sum()
    except RecursionError:
        # only reachable when the caller's own stack is already deep
        raise ExprSyntaxError("expression nested too deeply", _byte_offset(src, p.tok.pos)) from None
    if p.tok.kind != "end":
        p.fail(f"unexpected {p.tok.text!r}", {"+", "-", "*", "^", "|", "~", "end of input"})
    return node


def _children(node) -> tuple:
    if isinstance(node, (Neg, Rev, GradeSel)):
        return (node.operand,)
    if isinstance(node, BinOp):
        return (node.left, node.right)
    if isinstance(node, Call):
        return (node.arg,)
    if isinstance(node, (Num, BladeLit)):
        return ()
    raise TypeError(f"not an expression node: {node!r}")


def _fold(node, combine):
    """Post-order fold without Python recursion; long operator chains build deep trees."""
    stack = [(node, False)]
    values = []
    while stack:
        n, expanded = stack.pop()
        kids = _children(n)
        if expanded or not kids:
            args = values[len(values) - len(kids) :] if kids else []
            del values[len(values) - len(kids) :]
            values.append(combine(n, args))
        else:
            stack.append((n, True))
            stack.extend((k, False) for k in reversed(kids))
    return values[0]


def _is_exact(node, args) -> bool:
    if isinstance(node, Num):
        return isinstance(node.value, Fraction)
    return not isinstance(node, Call) and all(args)


def _eval_node(node, args, exact: bool) -> Multivector:
    if isinstance(node, Num):
        return Multivector.scalar(node.value if exact else float(node.value))
    if isinstance(node, BladeLit):
        return Multivector.blade(Blade(node.generators), Fraction(1) if exact else 1.0)
    if isinstance(node, Neg):
        return -args[0]
    if isinstance(node, Rev):
        return ~args[0]
    if isinstance(node, BinOp):
        a, b = args
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if node.op == "^":
            return a ^ b
        if node.op == "|":
            return a | b
    if isinstance(node, Call) and node.name == "exp":
        return exp_scalar_square(args[0])
    if isinstance(node, GradeSel):
        return grade_project(args[0], node.k)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node) -> Multivector:
    """Bottom-up evaluation, exact when every literal is an integer or rational."""
    exact = _fold(node, _is_exact)
    return _fold(node, lambda n, args: _eval_node(n, args, exact))


def evaluate_str(src: str) -> Multivector:
    return evaluate(parse(src))


def format_coefficient(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    c = float(c)
    if c.is_integer() and abs(c) < 1e16:
        return str(int(c))
    return repr(c)


def format_multivector(x: Multivector) -> str:
    """Canonical text: grade-ascending terms, zero terms omitted, ``0`` if empty."""
    parts = []
    for m in CANONICAL_ORDER:
        c = x.coeffs[m]
        if c == 0:
            continue
        name = Blade.from_mask(m).name
        neg = c < 0
        mag = format_coefficient(-c if neg else c)
        if m == 0:
            body = mag
        elif mag == "1":
            body = name
        else:
            body = f"{mag}*{name}"
        parts.append((neg, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _sexpr_node(node, args) -> str:
    if isinstance(node, Num):
        return format_coefficient(node.value)
    if isinstance(node, BladeLit):
        return Blade(node.generators).name if node.generators != (0, 1, 2, 3, 4) else "i"
    if isinstance(node, Neg):
        return f"(-{args[0]})"
    if isinstance(node, Rev):
        return f"({args[0]}~)"
    if isinstance(node, BinOp):
        return f"({args[0]}{node.op}{args[1]})"
    if isinstance(node, Call):
        return f"{node.name}({args[0]})"
    return f"<{args[0]}>{node.k}"


def to_sexpr(node) -> str:
    """Fully parenthesized rendering of an AST, for golden tests and debugging."""
    return _fold(node, _sexpr_node)


__all__ = [
    "BinOp",
    "BladeLit",
    "Call",
    "GradeSel",
    "I",
    "Neg",
    "Num",
    "Rev",
    "evaluate",
    "evaluate_str",
    "format_multivector",
    "parse",
    "to_sexpr",
]
