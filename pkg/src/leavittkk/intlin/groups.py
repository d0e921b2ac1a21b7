"""Finitely generated abelian groups in invariant-factor form.

A group is ``Z^r + Z/d1 + ... + Z/dk`` with ``2 <= d1 | d2 | ... | dk``.
Groups obtained as cokernels keep their presentation so that vectors of the
ambient lattice can be written in canonical coordinates: free coordinates
first, then torsion coordinates in ascending order of the invariant factors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence

from sympy import factorint

from .matrix import IntMatrix, SmithNF, smith_normal_form

__all__ = [
    "FgAb",
    "GroupElement",
    "DivisiblePower",
    "MixedGroup",
    "Presentation",
    "canonical_group",
    "invariant_factors",
    "elementary_divisors",
    "cokernel",
    "project_element",
    "hom_group",
    "tensor_group",
    "tensor_with_cstar",
    "direct_sum",
    "parse_group",
    "TRIVIAL",
    "Z",
]


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors of ``sum Z/n`` over the given cyclic orders (each >= 1)."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        if n < 1:
            raise ValueError(f"cyclic order must be positive, got {n}")
        for p, e in factorint(n).items():
            by_prime.setdefault(p, []).append(e)
    depth = max((len(es) for es in by_prime.values()), default=0)
    factors = [1] * depth
    for p, es in by_prime.items():
        es.sort(reverse=True)
        for k, e in enumerate(es):
            factors[k] *= p ** e
    return tuple(sorted(factors))


@dataclass(frozen=True)
class Presentation:
    """``coker(matrix)`` together with its Smith decomposition."""

    matrix: IntMatrix
    snf: SmithNF
    free_idx: tuple[int, ...]
    torsion_idx: tuple[int, ...]
    moduli: tuple[int, ...]

    @property
    def ambient_rank(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class FgAb:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    presentation: Presentation | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        t = self.torsion
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not an invariant-factor chain")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Cyclic order of each canonical coordinate, 0 for free ones."""
        return (0,) * self.free_rank + self.torsion

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_free(self) -> bool:
        return not self.torsion

    def is_cyclic(self) -> bool:
        return self.ngens <= 1

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return prod(self.torsion) if self.free_rank == 0 else None

    def torsion_order(self) -> int:
        return prod(self.torsion)

    def canonical(self) -> FgAb:
        """Drop the presentation."""
        return FgAb(self.free_rank, self.torsion)

    def element(self, coords: Sequence[int]) -> GroupElement:
        return GroupElement(self, tuple(coords))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.ngens)

    def generators(self) -> list[GroupElement]:
        n = self.ngens
        return [GroupElement(self, tuple(int(i == j) for j in range(n))) for i in range(n)]

    def primary_decomposition(self) -> list[int]:
        return elementary_divisors(self)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


TRIVIAL = FgAb()
Z = FgAb(1)


def canonical_group(free_rank: int, orders: Iterable[int]) -> FgAb:
    """Group ``Z^free_rank + sum Z/n`` in canonical form; orders equal to 1 vanish."""
    return FgAb(free_rank, tuple(d for d in invariant_factors(orders) if d > 1))


def elementary_divisors(g: FgAb) -> list[int]:
    """Prime-power cyclic orders of the torsion part, sorted by prime then exponent."""
    out = []
    for d in g.torsion:
        out.extend(p ** e for p, e in factorint(d).items())
    return sorted(out, key=lambda q: (min(factorint(q)), q))


@dataclass(frozen=True)
class GroupElement:
    owner: FgAb
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.owner.ngens:
            raise ValueError(
                f"element needs {self.owner.ngens} coordinates, got {len(coords)}")
        coords = tuple(c % m if m else c for c, m in zip(coords, self.owner.moduli))
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.owner, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GroupElement:
        return GroupElement(self.owner, tuple(-a for a in self.coords))

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def __rmul__(self, n: int) -> GroupElement:
        return GroupElement(self.owner, tuple(n * a for a in self.coords))

    def _check(self, other):
        if self.owner != other.owner:
            raise ValueError("elements of different groups")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int | None:
        """Order of the element, None if infinite."""
        g = self.owner
        if any(self.coords[:g.free_rank]):
            return None
        n = 1
        for c, d in zip(self.coords[g.free_rank:], g.torsion):
            k = d // gcd(c, d)
            n = n * k // gcd(n, k)
        return n

    def generates(self) -> bool:
        """True iff this element alone generates the owner group."""
        g = self.owner
        if g.is_trivial():
            return True
        if not g.is_cyclic():
            return False
        (c,) = self.coords
        return abs(c) == 1 if g.free_rank else gcd(c, g.torsion[0]) == 1

    def describe(self) -> str:
        if self.is_zero():
            return "0"
        if self.generates():
            return "generator"
        if len(self.coords) == 1:
            return str(self.coords[0])
        return "(" + ", ".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class DivisiblePower:
    """The divisible group ``(C*)^rank``, tracked only through its rank."""

    rank: int = 0

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")

    def is_trivial(self) -> bool:
        return self.rank == 0

    def __str__(self) -> str:
        return f"(C*)^{self.rank}" if self.rank else "0"


@dataclass(frozen=True)
class MixedGroup:
    """Direct sum of a finitely generated group and a divisible power."""

    fg: FgAb = TRIVIAL
    divisible: DivisiblePower = DivisiblePower(0)

    def is_trivial(self) -> bool:
        return self.fg.is_trivial() and self.divisible.is_trivial()

    def __add__(self, other: MixedGroup) -> MixedGroup:
        return MixedGroup(direct_sum(self.fg, other.fg),
                          DivisiblePower(self.divisible.rank + other.divisible.rank))

    def __str__(self) -> str:
        parts = [str(p) for p in (self.fg, self.divisible) if not p.is_trivial()]
        return " + ".join(parts) if parts else "0"


def direct_sum(*groups: FgAb) -> FgAb:
    return canonical_group(sum(g.free_rank for g in groups),
                           [d for g in groups for d in g.torsion])


def cokernel(a: IntMatrix) -> FgAb:
    """``Z^rows / (column span of a)``, keeping the presentation."""
    snf = smith_normal_form(a)
    diag = snf.diagonal + [0] * (a.rows - min(a.rows, a.cols))
    free_idx = tuple(i for i, d in enumerate(diag) if d == 0)
    torsion_idx = tuple(i for i, d in enumerate(diag) if d > 1)
    moduli = tuple(diag[i] for i in torsion_idx)
    pres = Presentation(a, snf, free_idx, torsion_idx, moduli)
    return FgAb(len(free_idx), moduli, presentation=pres)


def project_element(g: FgAb, v: Sequence[int]) -> GroupElement:
    """Class of the ambient vector ``v`` in canonical coordinates."""
    pres = g.presentation
    if pres is None:
        raise ValueError("group carries no presentation")
    if len(v) != pres.ambient_rank:
        raise ValueError(f"vector of length {len(v)}, ambient rank is {pres.ambient_rank}")
    y = pres.snf.U.apply(list(v))
    return GroupElement(g, tuple(y[i] for i in pres.free_idx + pres.torsion_idx))


def generator_lifts(g: FgAb) -> list[list[int]]:
    """Ambient vectors representing the canonical generators of a cokernel."""
    pres = g.presentation
    if pres is None:
        raise ValueError("group carries no presentation")
    uinv = inverse_unimodular(pres.snf.U)
    return [uinv.column(i) for i in pres.free_idx + pres.torsion_idx]


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Integer inverse of a matrix with determinant +-1."""
    n = m.rows
    if n != m.cols:
        raise ValueError("non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m.to_rows())]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    rows = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in rows for x in row):
        raise ValueError("matrix is not unimodular")
    return IntMatrix.from_rows([[int(x) for x in row] for row in rows], cols=n)


def hom_group(g: FgAb, h: FgAb) -> FgAb:
    """``Hom(g, h)`` from Hom(Z,H)=H, Hom(Z/m,Z/n)=Z/gcd(m,n), Hom(Z/m,Z)=0."""
    orders = list(h.torsion) * g.free_rank
    orders += [gcd(m, n) for m in g.torsion for n in h.torsion]
    return canonical_group(g.free_rank * h.free_rank, orders)


def tensor_group(g: FgAb, h: FgAb) -> FgAb:
    orders = list(h.torsion) * g.free_rank + list(g.torsion) * h.free_rank
    orders += [gcd(m, n) for m in g.torsion for n in h.torsion]
    return canonical_group(g.free_rank * h.free_rank, orders)


def tensor_with_cstar(g: FgAb) -> DivisiblePower:
    """``g (x) C*``: torsion dies against a divisible group, each Z gives a C*."""
    return DivisiblePower(g.free_rank)


_TERM = re.compile(r"^(?:Z(?:\^(\d+))?|Z/(\d+)|0)$")


def parse_group(text: str) -> FgAb:
    """Inverse of ``str(FgAb)``; summands may come in any order."""
    free = 0
    orders = []
    for raw in text.split("+"):
        tok = raw.strip()
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"bad group summand {tok!r} in {text!r}")
        if tok == "0":
            continue
        if m.group(2) is not None:
            d = int(m.group(2))
            if d == 0:
                raise ValueError("Z/0 is not allowed; write Z")
            orders.append(d)
        else:
            free += int(m.group(1)) if m.group(1) else 1
    return canonical_group(free, orders)
