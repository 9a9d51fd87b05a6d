"""The expression language used on the command line.

Grammar (whitespace-insensitive)::

    expr  := term { "#" term }
    term  := atom [ "^" int ]
    atom  := "tau" | "split1(" knots ")" | "split2(" knots ")" | "cable(" knots ")"
           | "generic(" id [ "," "lk=" int ] ")" | "[" morse-tokens "]" | "(" expr ")"
    knots := id { "#" id }

``#`` is stacking at the top level and connected sum inside a knot list.
The knot id ``unknot`` stands for the empty knot.  ``lk=`` gives a generic
letter's 2l (0 or 1), which also fixes whether it is pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import LayerError, NotInvertible, ParseError
from .monoid import Cable, Generic, KnotWord, Letter, Split, Twist
from .morse import MorseWord, empty, is_syntactic_braid, parse_morse, reverse, stack

__all__ = [
    "MorseLiteral", "Symbolic", "Stack", "Power", "Expression",
    "parse_expression", "format_expression", "format_letter", "format_word", "evaluate",
]


@dataclass(frozen=True)
class MorseLiteral:
    word: MorseWord


@dataclass(frozen=True)
class Symbolic:
    letters: tuple


@dataclass(frozen=True)
class Stack:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Power:
    base: "Expression"
    exponent: int


Expression = Union[MorseLiteral, Symbolic, Stack, Power]

_ID = re.compile(r"[A-Za-z0-9_]+")
_INT = re.compile(r"[+-]?\d+")
_KEYWORDS = ("tau", "split1", "split2", "cable", "generic")
_ATOM_START = ["tau", "split1(", "split2(", "cable(", "generic(", "[", "("]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        before = self.text[:pos]
        line = before.count("\n") + 1
        return line, pos - (before.rfind("\n") + 1) + 1

    def fail(self, message, expected, pos=None):
        raise ParseError(message, *self.where(pos), expected=expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            self.fail(f"unexpected {self.found()}", [s])
        self.pos += len(s)

    def found(self) -> str:
        self.skip()
        if self.pos >= len(self.text):
            return "end of input"
        return repr(self.text[self.pos])

    def ident(self, expected="<id>") -> str:
        self.skip()
        m = _ID.match(self.text, self.pos)
        if not m:
            self.fail(f"unexpected {self.found()}", [expected])
        self.pos = m.end()
        return m.group()

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.fail(f"unexpected {self.found()}", ["<int>"])
        self.pos = m.end()
        return int(m.group())

    def parse(self) -> Expression:
        e = self.expr()
        self.skip()
        if self.pos < len(self.text):
            self.fail(f"unexpected {self.found()}", ["#", "^", "end of input"])
        return e

    def expr(self) -> Expression:
        e = self.term()
        while self.peek("#"):
            self.pos += 1
            e = Stack(e, self.term())
        return e

    def term(self) -> Expression:
        a = self.atom()
        if self.peek("^"):
            self.pos += 1
            a = Power(a, self.integer())
        return a

    def atom(self) -> Expression:
        self.skip()
        if self.peek("("):
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        if self.peek("["):
            start = self.pos + 1
            end = self.text.find("]", start)
            if end < 0:
                self.fail("unterminated Morse literal", ["]"], pos=len(self.text))
            word = parse_morse(self.text[start:end], *self.where(start))
            self.pos = end + 1
            return MorseLiteral(word)
        m = _ID.match(self.text, self.pos)
        name = m.group() if m else None
        if name not in _KEYWORDS:
            self.fail(f"unexpected {self.found()}", _ATOM_START)
        self.pos = m.end()
        if name == "tau":
            return Symbolic((Twist(1),))
        self.expect("(")
        if name == "generic":
            gid = self.ident()
            two_ell = 0
            if self.peek(","):
                self.pos += 1
                self.expect("lk=")
                at = self.pos
                two_ell = self.integer()
                if two_ell not in (0, 1):
                    self.fail(f"generic lk must be 0 or 1, got {two_ell}", ["0", "1"], pos=at)
            self.expect(")")
            return Symbolic((Generic(gid, two_ell),))
        atoms = [self.ident("<knot id>")]
        while self.peek("#"):
            self.pos += 1
            atoms.append(self.ident("<knot id>"))
        self.expect(")")
        knot = KnotWord(tuple(a for a in atoms if a != "unknot"))
        if name == "cable":
            return Symbolic((Cable(knot),))
        return Symbolic((Split(int(name[-1]), knot),))


def parse_expression(text: str) -> Expression:
    return _Parser(text).parse()


# -- printing ------------------------------------------------------------------

def _knots(k: KnotWord) -> str:
    return " # ".join(k.atoms) if k.atoms else "unknot"


def format_letter(letter: Letter) -> str:
    if isinstance(letter, Twist):
        return "tau" if letter.k == 1 else f"tau^{letter.k}"
    if isinstance(letter, Split):
        return f"split{letter.strand}({_knots(letter.knot)})"
    if isinstance(letter, Cable):
        return f"cable({_knots(letter.knot)})"
    if isinstance(letter, Generic):
        return f"generic({letter.id}, lk={letter.two_ell})" if letter.two_ell else f"generic({letter.id})"
    raise TypeError(f"not a symbolic letter: {letter!r}")


def format_word(letters) -> str:
    """Text for a symbolic word; the empty word prints as ``tau^0``."""
    return " # ".join(format_letter(x) for x in letters) if letters else "tau^0"


def _fmt(e: Expression, ctx: str) -> str:
    """``ctx`` is "top", "right" (right operand of #) or "base" (of ^)."""
    if isinstance(e, MorseLiteral):
        return f"[{e.word}]"
    if isinstance(e, Symbolic):
        s = format_word(e.letters)
        simple = len(e.letters) == 1 and "^" not in s
        return s if simple or ctx == "top" or (ctx == "right" and "#" not in s) else f"({s})"
    if isinstance(e, Power):
        s = f"{_fmt(e.base, 'base')}^{e.exponent}"
        return f"({s})" if ctx == "base" else s
    s = f"{_fmt(e.left, 'top')} # {_fmt(e.right, 'right')}"
    return s if ctx == "top" else f"({s})"


def format_expression(e: Expression) -> str:
    return _fmt(e, "top")


# -- evaluation ------------------------------------------------------------------

Value = Union[tuple, MorseWord]


def evaluate(e: Expression) -> Value:
    """A symbolic word (tuple of letters) or a Morse word."""
    if isinstance(e, MorseLiteral):
        return e.word
    if isinstance(e, Symbolic):
        return tuple(e.letters)
    if isinstance(e, Stack):
        a, b = evaluate(e.left), evaluate(e.right)
        if isinstance(a, MorseWord) and isinstance(b, MorseWord):
            return stack(a, b)
        if isinstance(a, tuple) and isinstance(b, tuple):
            return a + b
        raise LayerError("cannot stack a symbolic word with a Morse diagram")
    base = evaluate(e.base)
    k = e.exponent
    if k < 0:
        base = _inverse(base)
        k = -k
    if isinstance(base, MorseWord):
        out = empty(base.n)
        for _ in range(k):
            out = stack(out, base)
        return out
    return base * k


def _inverse(v: Value) -> Value:
    if isinstance(v, MorseWord):
        if not is_syntactic_braid(v):
            raise NotInvertible("negative powers need a braid word")
        return reverse(v)
    if not all(isinstance(x, Twist) for x in v):
        raise NotInvertible("negative powers need an all-twist word")
    return tuple(Twist(-x.k) for x in reversed(v))
