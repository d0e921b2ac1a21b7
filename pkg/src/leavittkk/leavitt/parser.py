"""Parser for Leavitt path algebra expressions.

Grammar::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (['*'|'.'] factor)*        juxtaposition also multiplies
    factor  := ['-'] primary '^'*
    primary := IDENT | INT ['/' INT] | 'i' | '(' expr ')'

``^`` is the adjoint.  A term made only of scalars and generators in the
shape ``e_1 ... e_n f_m^ ... f_1^`` (or a lone vertex) is read as the
monomial ``p q^*`` and must be well formed; any other product is formed
with the multiplication rules, so ``e1^.e2`` is simply zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LeavittAlgebra, LeavittElement, PathMonomial, _accumulate
from .coefficients import ONE, I, coeff, conj

__all__ = ["ElementSyntaxError", "parse_element", "tokenize"]


class ElementSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*./^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # num | ident | op | end
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ElementSyntaxError(f"unexpected character {text[pos]!r} at position {pos}")
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# factor values: ("scalar", c) | ("gen", name, starred) | ("elem", LeavittElement)


class _Parser:
    def __init__(self, alg: LeavittAlgebra, text: str):
        self.alg = alg
        self.g = alg.graph
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        if self.g.is_vertex("i") or self.g.is_edge("i"):
            raise ElementSyntaxError("graph names an element 'i', which is reserved for the imaginary unit")

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        where = "end of input" if tok.kind == "end" else f"{tok.text!r} at position {tok.pos}"
        raise ElementSyntaxError(f"{msg} near {where}")

    def parse(self) -> LeavittElement:
        if self.peek().kind == "end":
            self.error("empty expression")
        x = self.expr()
        if self.peek().kind != "end":
            self.error("unexpected token")
        return x

    def expr(self) -> LeavittElement:
        acc: dict = {}
        sign = ONE
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            sign = -ONE if t.text == "-" else ONE
        while True:
            for m, c in self.term().terms.items():
                _accumulate(acc, m, sign * c)
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                sign = -ONE if t.text == "-" else ONE
                continue
            return LeavittElement(self.alg, acc)

    def _starts_factor(self, t: Token) -> bool:
        return t.kind in ("num", "ident") or (t.kind == "op" and t.text == "(")

    def term(self) -> LeavittElement:
        factors = self.factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "*.":
                self.take()
                factors += self.factor()
            elif self._starts_factor(t):
                factors += self.factor()
            else:
                break
        return self._combine(factors)

    def factor(self) -> list:
        t = self.peek()
        neg = False
        if t.kind == "op" and t.text == "-":
            self.take()
            neg = True
        f = self.primary()
        while self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            f = _star(self.alg, f)
        return [("scalar", -ONE), f] if neg else [f]

    def primary(self):
        t = self.take()
        if t.kind == "num":
            num = int(t.text)
            if self.peek().kind == "op" and self.peek().text == "/":
                self.take()
                d = self.take()
                if d.kind != "num":
                    self.error("expected a denominator", d)
                if int(d.text) == 0:
                    self.error("division by zero", d)
                return ("scalar", coeff(Fraction(num, int(d.text))))
            return ("scalar", coeff(num))
        if t.kind == "ident":
            if t.text == "i":
                return ("scalar", I)
            if self.g.is_vertex(t.text) or self.g.is_edge(t.text):
                return ("gen", t.text, False)
            self.error("unknown generator", t)
        if t.kind == "op" and t.text == "(":
            inner = self.expr()
            if self.take().text != ")":
                self.error("expected ')'", self.toks[self.i - 1])
            return ("elem", inner)
        self.error("unexpected token", t)

    def _combine(self, factors) -> LeavittElement:
        scal = ONE
        gens = []
        pure = True
        for f in factors:
            if f[0] == "scalar":
                scal = scal * f[1]
            elif f[0] == "gen":
                gens.append(f)
            else:
                pure = False
        if pure:
            mono = self._word_monomial(gens)
            if mono is not None:
                return LeavittElement(self.alg, {mono: scal} if scal else {})
        out = self.alg.one()
        for f in factors:
            out = out.raw_mul(_as_element(self.alg, f))
        return out

    def _word_monomial(self, gens) -> PathMonomial | None:
        """Strict reading of ``e_1..e_n f_m^..f_1^``; None if the word has another shape."""
        if not gens:
            return None
        if len(gens) == 1 and self.g.is_vertex(gens[0][1]):
            return PathMonomial((), (), gens[0][1])
        if any(self.g.is_vertex(name) for _, name, _ in gens):
            return None
        flags = [s for _, _, s in gens]
        if flags != sorted(flags):  # a starred edge before an unstarred one
            return None
        p = tuple(name for _, name, s in gens if not s)
        q = tuple(reversed([name for _, name, s in gens if s]))
        return self.alg.monomial(p, q)


def _star(alg: LeavittAlgebra, f):
    kind = f[0]
    if kind == "scalar":
        return ("scalar", conj(f[1]))
    if kind == "gen":
        name, starred = f[1], f[2]
        if alg.graph.is_vertex(name):
            return f
        return ("gen", name, not starred)
    x = f[1]
    return ("elem", LeavittElement(alg, {m.star(): conj(c) for m, c in x.terms.items()}))


def _as_element(alg: LeavittAlgebra, f) -> LeavittElement:
    kind = f[0]
    if kind == "scalar":
        return alg.scalar(f[1])
    if kind == "gen":
        name, starred = f[1], f[2]
        if alg.graph.is_vertex(name):
            return alg.vertex(name)
        return alg.ghost(name) if starred else alg.edge(name)
    return f[1]


def parse_element(alg_or_graph, text: str) -> LeavittElement:
    """Parse ``text`` into an element of L(E); the result is not normalized."""
    alg = alg_or_graph if isinstance(alg_or_graph, LeavittAlgebra) else LeavittAlgebra(alg_or_graph)
    return _Parser(alg, text).parse()
