"""Two-fold algebraic tensor products ``L(F) (x) L(E)`` of Leavitt path algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .algebra import LeavittAlgebra, LeavittElement, PathMonomial, _accumulate
from .coefficients import ONE, QQ_I, conj, format_coeff

__all__ = ["TensorAlgebra", "TensorElement"]

Pair = tuple[PathMonomial, PathMonomial]


class TensorAlgebra:
    def __init__(self, left: LeavittAlgebra, right: LeavittAlgebra):
        self.left = left
        self.right = right

    def __eq__(self, other):
        return (isinstance(other, TensorAlgebra)
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        return hash((self.left, self.right))

    def zero(self) -> TensorElement:
        return TensorElement(self, {})

    def one(self) -> TensorElement:
        return self.tensor(self.left.one(), self.right.one())

    def tensor(self, a: LeavittElement, b: LeavittElement) -> TensorElement:
        acc: dict[Pair, QQ_I] = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                _accumulate(acc, (m1, m2), c1 * c2)
        return TensorElement(self, acc)


@dataclass(frozen=True, eq=False)
class TensorElement:
    algebra: TensorAlgebra
    terms: Mapping[Pair, QQ_I]

    def normal_form(self) -> TensorElement:
        left, right = self.algebra.left, self.algebra.right
        budget_l, budget_r = [left.step_bound], [right.step_bound]
        acc: dict[Pair, QQ_I] = {}
        for (m1, m2), c in self.terms.items():
            n1 = {m1: ONE} if left.is_reduced(m1) else left.reduce_monomial(m1, budget_l)
            n2 = {m2: ONE} if right.is_reduced(m2) else right.reduce_monomial(m2, budget_r)
            for a, ca in n1.items():
                for b, cb in n2.items():
                    _accumulate(acc, (a, b), c * ca * cb)
        return TensorElement(self.algebra, acc)

    def _check(self, other: TensorElement) -> None:
        if not isinstance(other, TensorElement) or other.algebra != self.algebra:
            raise ValueError("tensor elements belong to different algebras")

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(acc, k, c)
        return TensorElement(self.algebra, acc).normal_form()

    def scale(self, c) -> TensorElement:
        return TensorElement(self.algebra, {k: c * x for k, x in self.terms.items()} if c else {})

    def __neg__(self) -> TensorElement:
        return self.scale(-ONE)

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def __mul__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        left, right = self.algebra.left, self.algebra.right
        acc: dict[Pair, QQ_I] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                a = left.mul_monomials(a1, a2)
                if a is None:
                    continue
                b = right.mul_monomials(b1, b2)
                if b is not None:
                    _accumulate(acc, (a, b), c1 * c2)
        return TensorElement(self.algebra, acc).normal_form()

    def star(self) -> TensorElement:
        return TensorElement(self.algebra, {(a.star(), b.star()): conj(c)
                                            for (a, b), c in self.terms.items()}).normal_form()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.algebra == other.algebra
                and dict(self.normal_form().terms) == dict(other.normal_form().terms))

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.normal_form().terms

    def __str__(self) -> str:
        left, right = self.algebra.left, self.algebra.right
        items = sorted(self.terms.items(),
                       key=lambda kc: (left.sort_key(kc[0][0]), right.sort_key(kc[0][1])))
        if not items:
            return "0"
        pieces = []
        for (a, b), c in items:
            body = f"{left.format_monomial(a)} (x) {right.format_monomial(b)}"
            if c == ONE:
                pieces.append(body)
            elif c == -ONE:
                pieces.append("-" + body)
            elif c.x == 0 or c.y == 0:
                pieces.append(f"{format_coeff(c)}*{body}")
            else:
                pieces.append(f"({format_coeff(c)})*{body}")
        out = pieces[0]
        for t in pieces[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"TensorElement({str(self)!r})"
