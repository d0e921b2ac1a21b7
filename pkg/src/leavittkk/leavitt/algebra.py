"""Leavitt path algebras over the Gaussian rationals.

Elements are finite linear combinations of monomials ``p q^*`` with
``r(p) = r(q)``.  Products are formed with ``e^* f = delta_{e,f} r(e)``
(the prefix rule on paths), and the normal form eliminates, at every vertex,
the factor ``e_k e_k^*`` of the last outgoing edge ``e_k`` in input order:

    e_k e_k^*  ->  v - sum_{i<k} e_i e_i^*

Monomials in normal form, i.e. those whose paths do not both end in the
eliminated edge, form a basis, so two elements are equal iff their normal
forms agree term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from ..graph import Graph
from .coefficients import ONE, ZERO, QQ_I, coeff, conj, format_coeff

__all__ = [
    "PathMonomial",
    "LeavittAlgebra",
    "LeavittElement",
    "RewriteLimitExceeded",
    "normal_form",
    "add",
    "multiply",
    "scalar",
    "involute",
]

DEFAULT_STEP_BOUND = 1_000_000


class RewriteLimitExceeded(RuntimeError):
    pass


class PathMonomial(NamedTuple):
    """``p q^*``; ``vertex`` is the common range ``r(p) = r(q)``."""

    p: tuple[str, ...]
    q: tuple[str, ...]
    vertex: str

    def star(self) -> PathMonomial:
        return PathMonomial(self.q, self.p, self.vertex)


class LeavittAlgebra:
    """The Leavitt path algebra L(E) of a finite graph, with cached rewriting data."""

    def __init__(self, graph: Graph, step_bound: int = DEFAULT_STEP_BOUND):
        self.graph = graph
        self.step_bound = step_bound
        # eliminated edge at each vertex: the last outgoing one
        self.special = {v: es[-1].id for v, es in graph.out_edges.items() if es}
        self._nf_cache: dict[PathMonomial, dict[PathMonomial, QQ_I]] = {}

    def __eq__(self, other):
        return isinstance(other, LeavittAlgebra) and self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)

    # -- constructors -----------------------------------------------------

    def path_source(self, path: tuple[str, ...], vertex: str) -> str:
        return self.graph.src(path[0]) if path else vertex

    def monomial(self, p: Iterable[str] = (), q: Iterable[str] = (),
                 vertex: str | None = None) -> PathMonomial:
        """Checked constructor: ``p`` and ``q`` composable with a common range."""
        from .parser import ElementSyntaxError

        g = self.graph
        p, q = tuple(p), tuple(q)
        for path in (p, q):
            for a, b in zip(path, path[1:]):
                if g.dst(a) != g.src(b):
                    raise ElementSyntaxError(f"non-composable path {'.'.join(path)}")
        rp = g.dst(p[-1]) if p else None
        rq = g.dst(q[-1]) if q else None
        ends = {x for x in (rp, rq, vertex) if x is not None}
        if len(ends) != 1:
            raise ElementSyntaxError(
                f"r(p) != r(q) for p={'.'.join(p) or vertex}, q={'.'.join(q) or vertex}")
        return PathMonomial(p, q, ends.pop())

    def element(self, terms: Mapping[PathMonomial, object] | Iterable = ()) -> LeavittElement:
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[PathMonomial, QQ_I] = {}
        for m, c in terms:
            _accumulate(acc, m, coeff(c))
        return LeavittElement(self, acc)

    def zero(self) -> LeavittElement:
        return LeavittElement(self, {})

    def vertex(self, v: str) -> LeavittElement:
        if not self.graph.is_vertex(v):
            raise KeyError(v)
        return LeavittElement(self, {PathMonomial((), (), v): ONE})

    def edge(self, e: str) -> LeavittElement:
        return LeavittElement(self, {PathMonomial((e,), (), self.graph.dst(e)): ONE})

    def ghost(self, e: str) -> LeavittElement:
        """The adjoint ``e^*``."""
        return LeavittElement(self, {PathMonomial((), (e,), self.graph.dst(e)): ONE})

    def one(self) -> LeavittElement:
        return LeavittElement(self, {PathMonomial((), (), v): ONE for v in self.graph.vertices})

    def scalar(self, c) -> LeavittElement:
        return self.one().scale(coeff(c))

    def parse(self, text: str) -> LeavittElement:
        from .parser import parse_element
        return parse_element(self, text)

    # -- arithmetic on monomials -----------------------------------------

    def mul_monomials(self, a: PathMonomial, b: PathMonomial) -> PathMonomial | None:
        """``(p1 q1^*)(p2 q2^*)`` via the prefix rule, or None when it vanishes."""
        q1, p2 = a.q, b.p
        n1, n2 = len(q1), len(p2)
        if n1 <= n2:
            if p2[:n1] != q1:
                return None
            if n1 == 0 and self.path_source(p2, b.vertex) != a.vertex:
                return None
            return PathMonomial(a.p + p2[n1:], b.q, b.vertex)
        if q1[:n2] != p2:
            return None
        if n2 == 0 and self.path_source(q1, a.vertex) != b.vertex:
            return None
        return PathMonomial(a.p, b.q + q1[n2:], a.vertex)

    def reduce_monomial(self, m: PathMonomial, budget: list[int] | None = None
                        ) -> dict[PathMonomial, QQ_I]:
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        out: dict[PathMonomial, QQ_I] = {}
        sign = ONE
        p, q, v = m
        steps = 0
        out_edges = self.graph.out_edges
        while p and q and p[-1] == q[-1] and self.special.get(self.graph.src(p[-1])) == p[-1]:
            steps += 1
            if budget is not None:
                budget[0] -= 1
                if budget[0] < 0:
                    raise RewriteLimitExceeded(
                        f"normal form exceeded {self.step_bound} rewriting steps")
            e = p[-1]
            u = self.graph.src(e)
            p, q = p[:-1], q[:-1]
            for f in out_edges[u]:
                if f.id != e:
                    _accumulate(out, PathMonomial(p + (f.id,), q + (f.id,), f.dst), -sign)
            v = u
        _accumulate(out, PathMonomial(p, q, v), sign)
        self._nf_cache[m] = out
        return out

    def is_reduced(self, m: PathMonomial) -> bool:
        p, q = m.p, m.q
        return not (p and q and p[-1] == q[-1]
                    and self.special.get(self.graph.src(p[-1])) == p[-1])

    def sort_key(self, m: PathMonomial):
        ei = self.graph.edge_index
        return (len(m.p) + len(m.q), len(m.p), [ei[e] for e in m.p], [ei[e] for e in m.q],
                self.graph.vertex_index[m.vertex])

    def format_monomial(self, m: PathMonomial) -> str:
        if not m.p and not m.q:
            return m.vertex
        return ".".join(list(m.p) + [f"{e}^" for e in reversed(m.q)])


def _accumulate(acc: dict, m, c) -> None:
    if not c:
        return
    total = acc.get(m, ZERO) + c
    if total:
        acc[m] = total
    else:
        acc.pop(m, None)


@dataclass(frozen=True, eq=False)
class LeavittElement:
    algebra: LeavittAlgebra
    terms: Mapping[PathMonomial, QQ_I]

    @property
    def graph(self) -> Graph:
        return self.algebra.graph

    # -- structure --------------------------------------------------------

    def normal_form(self) -> LeavittElement:
        alg = self.algebra
        budget = [alg.step_bound]
        acc: dict[PathMonomial, QQ_I] = {}
        for m, c in self.terms.items():
            if alg.is_reduced(m):
                _accumulate(acc, m, c)
                continue
            for m2, c2 in alg.reduce_monomial(m, budget).items():
                _accumulate(acc, m2, c * c2)
        return LeavittElement(alg, acc)

    def is_normal(self) -> bool:
        return all(self.algebra.is_reduced(m) for m in self.terms)

    def is_zero(self) -> bool:
        return not self.normal_form().terms

    def sorted_terms(self) -> list[tuple[PathMonomial, QQ_I]]:
        return sorted(self.terms.items(), key=lambda mc: self.algebra.sort_key(mc[0]))

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: LeavittElement) -> None:
        if not isinstance(other, LeavittElement):
            raise TypeError(f"cannot combine LeavittElement with {type(other).__name__}")
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise ValueError("elements belong to different graphs")

    def __add__(self, other: LeavittElement) -> LeavittElement:
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(acc, m, c)
        return LeavittElement(self.algebra, acc).normal_form()

    def __neg__(self) -> LeavittElement:
        return self.scale(-ONE)

    def __sub__(self, other: LeavittElement) -> LeavittElement:
        return self + (-other)

    def scale(self, c) -> LeavittElement:
        c = coeff(c)
        if not c:
            return self.algebra.zero()
        return LeavittElement(self.algebra, {m: c * x for m, x in self.terms.items()})

    def raw_mul(self, other: LeavittElement) -> LeavittElement:
        """Product without the final elimination step."""
        self._check(other)
        alg = self.algebra
        acc: dict[PathMonomial, QQ_I] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = alg.mul_monomials(m1, m2)
                if m is not None:
                    _accumulate(acc, m, c1 * c2)
        return LeavittElement(alg, acc)

    def __mul__(self, other) -> LeavittElement:
        if not isinstance(other, LeavittElement):
            return self.scale(coeff(other)).normal_form()
        return self.raw_mul(other).normal_form()

    def __rmul__(self, c) -> LeavittElement:
        return self.scale(coeff(c)).normal_form()

    def star(self) -> LeavittElement:
        """Semilinear involution: ``(c p q^*)^* = conj(c) q p^*``."""
        return LeavittElement(self.algebra,
                              {m.star(): conj(c) for m, c in self.terms.items()}).normal_form()

    # -- comparison and display -------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeavittElement):
            return NotImplemented
        if self.algebra != other.algebra:
            return False
        return dict(self.normal_form().terms) == dict(other.normal_form().terms)

    def __hash__(self):
        return hash(frozenset(self.normal_form().terms.items()))

    def __str__(self) -> str:
        alg = self.algebra
        pieces = []
        for m, c in self.sorted_terms():
            mon = alg.format_monomial(m)
            if c == ONE:
                t = mon
            elif c == -ONE:
                t = "-" + mon
            elif c.x == 0 or c.y == 0:
                t = f"{format_coeff(c)}*{mon}"
            else:
                t = f"({format_coeff(c)})*{mon}"
            pieces.append(t)
        if not pieces:
            return "0"
        out = pieces[0]
        for t in pieces[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"LeavittElement({str(self)!r})"


def normal_form(x: LeavittElement) -> LeavittElement:
    return x.normal_form()


def add(x: LeavittElement, y: LeavittElement) -> LeavittElement:
    return x + y


def multiply(x: LeavittElement, y: LeavittElement) -> LeavittElement:
    return x * y


def scalar(c, x: LeavittElement) -> LeavittElement:
    return x.scale(coeff(c)).normal_form()


def involute(x: LeavittElement) -> LeavittElement:
    return x.star()
