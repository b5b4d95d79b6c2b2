"""Expression language for groups and functor applications.

Group expressions are sums of atoms: Z, Z^k, Z/n (n >= 2), the literal 0,
parenthesized sums, and G for a group loaded from a relations file.
Functor expressions apply one functor to group arguments:

    SP^n(_)  Lambda^2(_)  Ls3(_)  L1SP^n(_)  L2Ls3(_)  Tor(_, _)
    H2(_)    Lie3embed-rank(_)

Degree bounds: SP 2..5, L1SP 2..4, Lambda exactly 2.  Parse errors carry
the byte offset of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .abelian import PresentedGroup, direct_sum
from .derived import Presentation, l1_sp, l2_superlie3, tor
from .functors import functor_on_group


class ExprError(ValueError):
    """Base for parse and semantic failures, with a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class ParseError(ExprError):
    pass


class SemanticError(ExprError):
    pass


# ------------------------------------------------------------------- AST

@dataclass(frozen=True)
class FreeAtom:
    copies: int


@dataclass(frozen=True)
class CyclicAtom:
    order: int


@dataclass(frozen=True)
class TrivialAtom:
    pass


@dataclass(frozen=True)
class RelationsAtom:
    pass


@dataclass(frozen=True)
class SumExpr:
    parts: Tuple["GroupExpr", ...]


GroupExpr = Union[FreeAtom, CyclicAtom, TrivialAtom, RelationsAtom, SumExpr]


@dataclass(frozen=True)
class FunctorCall:
    name: str
    degree: Optional[int]
    args: Tuple[GroupExpr, ...]


# -------------------------------------------------------------- tokenizer

_KEYWORDS = ("Lie3embed-rank", "Lambda", "L2Ls3", "L1SP", "Ls3", "Tor", "SP", "H2", "Z", "G")
_TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*(?:-[A-Za-z][A-Za-z0-9]*)*|\d+|[\^/+(),]")

_UNARY = {"SP", "Lambda", "Ls3", "L1SP", "L2Ls3", "H2", "Lie3embed-rank"}
_DEGREES = {"SP": (2, 5), "L1SP": (2, 4), "Lambda": (2, 2)}


@dataclass(frozen=True)
class _Token:
    kind: str  # keyword text, "INT", a punctuation char, or "END"
    text: str
    offset: int  # byte offset into the source


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str) -> List[_Token]:
    out: List[_Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", _byte_offset(text, pos))
        tok = m.group()
        off = _byte_offset(text, pos)
        if tok.isdigit():
            out.append(_Token("INT", tok, off))
        elif tok[0].isalpha():
            if tok not in _KEYWORDS:
                raise ParseError(f"unknown name {tok!r}", off)
            out.append(_Token(tok, tok, off))
        else:
            out.append(_Token(tok, tok, off))
        pos = m.end()
    out.append(_Token("END", "", _byte_offset(text, n)))
    return out


# ----------------------------------------------------------------- parser

class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            what = tok.text or "end of input"
            raise ParseError(f"expected {kind!r}, found {what!r}", tok.offset)
        return self.advance()

    def parse(self) -> Union[GroupExpr, FunctorCall]:
        tok = self.peek()
        if tok.kind in _UNARY or tok.kind == "Tor":
            node = self.functor()
        else:
            node = self.sum()
        end = self.peek()
        if end.kind != "END":
            raise ParseError(f"trailing input {end.text!r}", end.offset)
        return node

    def functor(self) -> FunctorCall:
        tok = self.advance()
        name = tok.kind
        degree = None
        if name in _DEGREES:
            self.expect("^")
            dtok = self.expect("INT")
            degree = int(dtok.text)
            lo, hi = _DEGREES[name]
            if not lo <= degree <= hi:
                raise SemanticError(f"{name} degree must be in {lo}..{hi}", dtok.offset)
        self.expect("(")
        args = [self.sum()]
        if name == "Tor":
            self.expect(",")
            args.append(self.sum())
        self.expect(")")
        return FunctorCall(name, degree, tuple(args))

    def sum(self) -> GroupExpr:
        parts = [self.term()]
        while self.peek().kind == "+":
            self.advance()
            parts.append(self.term())
        if len(parts) == 1:
            return parts[0]
        return SumExpr(tuple(parts))

    def term(self) -> GroupExpr:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            inner = self.sum()
            self.expect(")")
            return inner
        if tok.kind == "Z":
            self.advance()
            nxt = self.peek()
            if nxt.kind == "^":
                self.advance()
                k = int(self.expect("INT").text)
                return FreeAtom(k)
            if nxt.kind == "/":
                self.advance()
                ntok = self.expect("INT")
                n = int(ntok.text)
                if n < 2:
                    raise SemanticError("cyclic order must be >= 2", ntok.offset)
                return CyclicAtom(n)
            return FreeAtom(1)
        if tok.kind == "INT":
            if tok.text == "0":
                self.advance()
                return TrivialAtom()
            raise ParseError("bare integers other than 0 are not groups", tok.offset)
        if tok.kind == "G":
            self.advance()
            return RelationsAtom()
        what = tok.text or "end of input"
        raise ParseError(f"expected a group atom, found {what!r}", tok.offset)


def parse(text: str) -> Union[GroupExpr, FunctorCall]:
    """Parse a group or functor expression; raises ParseError or
    SemanticError with the byte offset of the problem."""
    return _Parser(text).parse()


# -------------------------------------------------------------- evaluator

def _eval_group(node: GroupExpr, relations_group: Optional[PresentedGroup]) -> PresentedGroup:
    if isinstance(node, FreeAtom):
        return PresentedGroup.free(node.copies)
    if isinstance(node, CyclicAtom):
        return PresentedGroup.cyclic(node.order)
    if isinstance(node, TrivialAtom):
        return PresentedGroup.trivial()
    if isinstance(node, RelationsAtom):
        if relations_group is None:
            raise SemanticError("no relations file loaded for G", 0)
        return relations_group
    if isinstance(node, SumExpr):
        return direct_sum(*(_eval_group(p, relations_group) for p in node.parts))
    raise TypeError(f"not a group expression: {node!r}")


def evaluate(node, relations_group: Optional[PresentedGroup] = None) -> PresentedGroup:
    """Evaluate a parsed expression to a presented group."""
    if isinstance(node, FunctorCall):
        args = [_eval_group(a, relations_group) for a in node.args]
        if node.name == "SP":
            return functor_on_group("sym", node.degree, args[0])
        if node.name == "Lambda":
            return functor_on_group("ext", 2, args[0])
        if node.name == "Ls3":
            return functor_on_group("superlie3", 3, args[0])
        if node.name == "H2":
            return functor_on_group("ext", 2, args[0])
        if node.name == "L1SP":
            return l1_sp(node.degree, Presentation.from_group(args[0]))
        if node.name == "L2Ls3":
            return l2_superlie3(Presentation.from_group(args[0]))
        if node.name == "Tor":
            return tor(
                Presentation.from_group(args[0]),
                Presentation.from_group(args[1]),
            )
        if node.name == "Lie3embed-rank":
            cf = args[0].canonical
            if cf.torsion:
                raise SemanticError("Lie3embed-rank needs a torsion-free group", 0)
            r = cf.free_rank
            return PresentedGroup.free((r**3 - r) // 3)
        raise TypeError(f"unknown functor {node.name!r}")
    return _eval_group(node, relations_group)
