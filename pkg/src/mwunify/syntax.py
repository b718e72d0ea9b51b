"""Concrete syntax for terms and substitutions.

    term  := atom | '(' term term ')' | ident '[' term (';' term)* ']'
    atom  := ident | '(' term ')'
    subst := '{' [var '->' term (';' var '->' term)*] '}'

``F[a; b]`` is sugar for ``((F a) b)``.  Uppercase identifiers are
constants, lowercase ones variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .subst import Subst, canonicalize
from .terms import Comb, Const, Term, Var

PUNCT = "()[];{}"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident', 'eof', or the punctuation itself
    text: str
    line: int
    column: int


def tokenize(src: str) -> Iterator[Token]:
    line, col, i = 1, 1, 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            col, i = col + 1, i + 1
            continue
        if ch in PUNCT:
            yield Token(ch, ch, line, col)
            col, i = col + 1, i + 1
            continue
        if src.startswith("->", i):
            yield Token("->", "->", line, col)
            col, i = col + 2, i + 2
            continue
        if ch.isascii() and ch.isalpha():
            j = i + 1
            while j < len(src) and src[j].isascii() and src[j].isalnum():
                j += 1
            yield Token("ident", src[i:j], line, col)
            col, i = col + (j - i), j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    yield Token("eof", "", line, col)


class _Parser:
    def __init__(self, src: str) -> None:
        self.tokens = list(tokenize(src))
        self.pos = 0
        if self.peek.kind == "eof":
            raise ParseError("empty input", self.peek.line, self.peek.column)

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {_describe(tok)}", tok.line, tok.column)
        return self.advance()

    def finish(self) -> None:
        tok = self.peek
        if tok.kind != "eof":
            raise ParseError(f"unexpected {_describe(tok)} after end of input", tok.line, tok.column)

    def term(self) -> Term:
        tok = self.peek
        if tok.kind == "ident":
            self.advance()
            head = _leaf(tok.text)
            if self.peek.kind != "[":
                return head
            self.advance()
            head = Comb(head, self.term())
            while self.peek.kind == ";":
                self.advance()
                head = Comb(head, self.term())
            self.expect("]")
            return head
        if tok.kind == "(":
            self.advance()
            first = self.term()
            if self.peek.kind == ")":
                self.advance()
                return first
            second = self.term()
            self.expect(")")
            return Comb(first, second)
        raise ParseError(f"expected a term, found {_describe(tok)}", tok.line, tok.column)

    def subst(self) -> Subst:
        self.expect("{")
        pairs: list[tuple[str, Term]] = []
        if self.peek.kind != "}":
            pairs.append(self.binding())
            while self.peek.kind == ";":
                self.advance()
                pairs.append(self.binding())
        self.expect("}")
        return Subst.of(pairs)

    def binding(self) -> tuple[str, Term]:
        tok = self.peek
        if tok.kind != "ident" or not tok.text[0].islower():
            raise ParseError(f"binding key must be a variable, found {_describe(tok)}",
                             tok.line, tok.column)
        self.advance()
        self.expect("->")
        return tok.text, self.term()


def _leaf(name: str) -> Term:
    return Const(name) if name[0].isupper() else Var(name)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


def parse_term(src: str) -> Term:
    p = _Parser(src)
    t = p.term()
    p.finish()
    return t


def parse_subst(src: str) -> Subst:
    p = _Parser(src)
    s = p.subst()
    p.finish()
    return s


def _spine(t: Term) -> tuple[Term, list[Term]]:
    args: list[Term] = []
    while isinstance(t, Comb):
        args.append(t.right)
        t = t.left
    args.reverse()
    return t, args


def print_term(t: Term) -> str:
    if isinstance(t, (Const, Var)):
        return t.name
    head, args = _spine(t)
    if isinstance(head, Const):
        return f"{head.name}[{'; '.join(print_term(a) for a in args)}]"
    return f"({print_term(t.left)} {print_term(t.right)})"


def print_subst(s: Subst, *, canonical: bool = True) -> str:
    """Brace notation; by default the canonical representative is printed."""
    if canonical:
        s = canonicalize(s)
    return "{" + "; ".join(f"{b.key} -> {print_term(b.value)}" for b in s) + "}"
