"""Parsing and printing for elements, module vectors and automorphisms.

Element grammar (whitespace is free between tokens):

    element  := ['-'] term (('+' | '-') term)*
    term     := [rational '*'] gen | [rational '*'] word 'v'
    gen      := ('L' | 'M' | 'Y') '(' rational ')'
    word     := gen*
    rational := ['-'] digits ['/' digits]

A term containing 'v' denotes a module vector: the generator word is
applied to the highest weight vector and normal ordered, so words do
not have to arrive sorted.  Automorphism literals are chains

    diag(t; s) | scale(a) | cocycle(l) | inner(element)

joined by '*', applied right to left.  The printers emit canonical
forms that re-parse to the same object.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Union

from .automorphisms import (
    Automorphism,
    Cocycle,
    Diagonal,
    Inner,
    Scale,
    normalize_chain,
)
from .errors import DomainError
from .groups import Character, GroupPresentation, as_rational
from .lie import GeneratorSymbol, LieElement, validate_symbol
from .verma import (
    HighestWeight,
    VermaVector,
    act_word,
    highest_weight_vector,
    monomial_letters,
)


class ExpressionSyntaxError(DomainError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]+)|([()*+\-;]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ExpressionSyntaxError(f"unexpected character at {pos}: {rest[:10]!r}")
        num, name, punct = m.groups()
        if num is not None:
            tokens.append(("num", num, m.start(1)))
        elif name is not None:
            tokens.append(("name", name, m.start(2)))
        else:
            tokens.append(("punct", punct, m.start(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[tuple[str, str]]:
        if self.pos < len(self.tokens):
            t = self.tokens[self.pos]
            return (t[0], t[1])
        return None

    def next(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ExpressionSyntaxError(f"unexpected end of input: {self.text!r}")
        self.pos += 1
        return tok

    def expect(self, kind: str, value: Optional[str] = None) -> str:
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ExpressionSyntaxError(
                f"expected {value or kind}, got {tok[1]!r} in {self.text!r}"
            )
        return tok[1]

    def done(self) -> bool:
        return self.pos >= len(self.tokens)

    def rational(self) -> Fraction:
        sign = 1
        tok = self.peek()
        if tok == ("punct", "-"):
            self.next()
            sign = -1
        tok = self.next()
        if tok[0] != "num":
            raise ExpressionSyntaxError(f"expected a rational, got {tok[1]!r}")
        try:
            return sign * Fraction(tok[1])
        except ZeroDivisionError:
            raise ExpressionSyntaxError(f"zero denominator in {tok[1]!r}") from None

    def gen(self, gp: GroupPresentation) -> GeneratorSymbol:
        kind = self.expect("name")
        if kind not in ("L", "M", "Y"):
            raise ExpressionSyntaxError(f"unknown generator kind {kind!r}")
        self.expect("punct", "(")
        index = self.rational()
        self.expect("punct", ")")
        sym = GeneratorSymbol(kind, index)
        validate_symbol(sym, gp)
        return sym


Parsed = Union[LieElement, VermaVector]


def parse_element(
    text: str,
    gp: GroupPresentation,
    hw: Optional[HighestWeight] = None,
) -> Parsed:
    """Parse an element of the algebra or, when 'v' appears, of V(c, h)."""
    p = _Parser(text)
    if p.peek() is None:
        raise ExpressionSyntaxError("empty expression")
    if len(p.tokens) == 1 and p.tokens[0][:2] == ("num", "0"):
        return LieElement(gp, {})
    acc: Optional[Parsed] = None
    sign = Fraction(1)
    if p.peek() == ("punct", "-"):
        p.next()
        sign = Fraction(-1)
    while True:
        piece = _term(p, gp, hw, sign)
        if acc is None:
            acc = piece
        else:
            if isinstance(acc, LieElement) != isinstance(piece, LieElement):
                raise ExpressionSyntaxError(
                    "cannot mix algebra terms and module terms in one expression"
                )
            acc = acc + piece
        if p.done():
            return acc
        tok = p.next()
        if tok == ("punct", "+"):
            sign = Fraction(1)
        elif tok == ("punct", "-"):
            sign = Fraction(-1)
        else:
            raise ExpressionSyntaxError(f"expected + or - before {tok[1]!r}")


def _term(
    p: _Parser, gp: GroupPresentation, hw: Optional[HighestWeight], sign: Fraction
) -> Parsed:
    coeff = sign
    tok = p.peek()
    if tok is not None and tok[0] == "num":
        coeff = coeff * p.rational()
        p.expect("punct", "*")
        tok = p.peek()
    word: list[GeneratorSymbol] = []
    saw_v = False
    while True:
        tok = p.peek()
        if tok is not None and tok[0] == "name" and tok[1] == "v":
            p.next()
            saw_v = True
            break
        if tok is not None and tok[0] == "name" and tok[1] in ("L", "M", "Y"):
            word.append(p.gen(gp))
            continue
        break
    if saw_v:
        if hw is None:
            raise ExpressionSyntaxError(
                "module terms need a highest weight (c, h) in scope"
            )
        return act_word(word, highest_weight_vector(gp, hw)).scaled(coeff)
    if len(word) != 1:
        raise ExpressionSyntaxError(
            "a term must be a single generator or a word ending in 'v'"
        )
    return LieElement(gp, {word[0]: coeff})


def parse_vector(text: str, gp: GroupPresentation, hw: HighestWeight) -> VermaVector:
    out = parse_element(text, gp, hw)
    if isinstance(out, LieElement):
        if out.is_zero:
            return VermaVector(gp, hw, {})
        raise ExpressionSyntaxError("expected a module vector (terms ending in 'v')")
    return out


def parse_lie(text: str, gp: GroupPresentation) -> LieElement:
    out = parse_element(text, gp, None)
    if not isinstance(out, LieElement):
        raise ExpressionSyntaxError("expected an algebra element, got a module vector")
    return out


def format_rational(r: Fraction) -> str:
    return str(r)


def format_symbol(sym: GeneratorSymbol) -> str:
    return f"{sym.kind}({format_rational(sym.index)})"


def _join_terms(pieces: list[tuple[Fraction, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for n, (coeff, body) in enumerate(pieces):
        mag = abs(coeff)
        rendered = body if mag == 1 else f"{format_rational(mag)}*{body}"
        if n == 0:
            out.append(f"-{rendered}" if coeff < 0 else rendered)
        else:
            out.append(f" - {rendered}" if coeff < 0 else f" + {rendered}")
    return "".join(out)


def format_element(e: LieElement) -> str:
    return _join_terms([(coeff, format_symbol(sym)) for sym, coeff in e.terms()])


def format_word(word) -> str:
    return "".join(format_symbol(sym) for sym in word)


def format_vector(v: VermaVector) -> str:
    pieces = []
    for mono, coeff in v.terms():
        body = format_word(monomial_letters(mono, v.group)) + "v"
        pieces.append((coeff, body))
    return _join_terms(pieces)


def format_automorphism(theta: Automorphism) -> str:
    if not theta.chain:
        return "scale(1)"
    pieces = []
    for prim in theta.chain:
        if isinstance(prim, Diagonal):
            pieces.append(
                f"diag({format_rational(prim.character.t)}; {format_rational(prim.s)})"
            )
        elif isinstance(prim, Scale):
            pieces.append(f"scale({format_rational(prim.a)})")
        elif isinstance(prim, Cocycle):
            pieces.append(f"cocycle({format_rational(prim.slope)})")
        else:
            pieces.append(f"inner({format_element(prim.x)})")
    return "*".join(pieces)


def parse_automorphism(text: str, gp: GroupPresentation) -> Automorphism:
    p = _Parser(text)
    chain = []
    while True:
        name = p.expect("name")
        p.expect("punct", "(")
        if name == "diag":
            t = p.rational()
            p.expect("punct", ";")
            s = p.rational()
            chain.append(Diagonal(Character(gp, t), s))
        elif name == "scale":
            chain.append(Scale(p.rational()))
        elif name == "cocycle":
            chain.append(Cocycle(p.rational()))
        elif name == "inner":
            elem = _parse_nested_element(p, gp)
            chain.append(Inner(elem))
        else:
            raise ExpressionSyntaxError(f"unknown automorphism family {name!r}")
        p.expect("punct", ")")
        if p.done():
            break
        p.expect("punct", "*")
    # validate every literal primitive before merging can hide one
    raw = Automorphism(gp, tuple(chain))
    return Automorphism(gp, normalize_chain(raw.chain))


def _parse_nested_element(p: _Parser, gp: GroupPresentation) -> LieElement:
    """Parse an element inside inner(...), stopping at its closing paren."""
    depth = 0
    start = p.pos
    end = start
    while end < len(p.tokens):
        kind, value, _ = p.tokens[end]
        if kind == "punct" and value == "(":
            depth += 1
        elif kind == "punct" and value == ")":
            if depth == 0:
                break
            depth -= 1
        end += 1
    if end == len(p.tokens):
        raise ExpressionSyntaxError("inner(...) is missing its closing paren")
    source = " ".join(
        tok[1] for tok in p.tokens[start:end]
    )  # retokenized below; tokens are whitespace-insensitive
    p.pos = end
    out = parse_element(source, gp, None)
    if not isinstance(out, LieElement):
        raise ExpressionSyntaxError("inner(...) takes an algebra element")
    return out
