"""Automorphism orbits and isomorphism certificates for canonical groups.

Homomorphisms between canonical groups are integer matrices acting on
canonical coordinate columns; rows belonging to a torsion summand ``Z/d``
are read modulo ``d``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

from .groups import FgAb, cokernel, inverse_unimodular
from .matrix import IntMatrix, unimodular_completion

__all__ = [
    "OrbitTooLarge",
    "ScaledIsoResult",
    "torsion_orbit",
    "find_scaled_automorphism",
    "check_isomorphism",
    "apply_hom",
]


class OrbitTooLarge(Exception):
    pass


def _reduce_rows(rows: list[list[int]], moduli: Sequence[int]) -> list[list[int]]:
    return [[x % m for x in row] if m else row for row, m in zip(rows, moduli)]


def apply_hom(m: IntMatrix, target: FgAb, coords: Sequence[int]) -> tuple[int, ...]:
    return tuple(c % d if d else c for c, d in zip(m.apply(list(coords)), target.moduli))


@lru_cache(maxsize=256)
def _unit_generators(d: int) -> tuple[int, ...]:
    """A generating set of the unit group of Z/d."""
    if d <= 2:
        return ()
    gens: list[int] = []
    reached = {1}
    for u in range(2, d):
        if gcd(u, d) != 1 or u in reached:
            continue
        gens.append(u)
        frontier = list(reached)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % d
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
    return tuple(gens)


def _elementary_automorphisms(torsion: Sequence[int]) -> list[list[list[int]]]:
    """Unit scalings of single coordinates and transvections ``x_j += c x_i``."""
    k = len(torsion)
    gens = []

    def ident():
        return [[int(i == j) for j in range(k)] for i in range(k)]

    for i, d in enumerate(torsion):
        for u in _unit_generators(d):
            m = ident()
            m[i][i] = u
            gens.append(m)
    for i, di in enumerate(torsion):
        for j, dj in enumerate(torsion):
            if i == j:
                continue
            # smallest c making Z/di -> Z/dj, 1 -> c well defined
            c = dj // gcd(di, dj)
            if c % dj == 0:
                continue
            m = ident()
            m[j][i] = c
            gens.append(m)
    return gens


def torsion_orbit(torsion: Sequence[int], x: Sequence[int], limit: int | None = None
                  ) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Orbit of ``x`` under the automorphisms of ``sum Z/d``.

    Maps each orbit element ``y`` to an automorphism matrix sending ``x`` to
    ``y``.  Insertion order is breadth-first and deterministic.
    """
    torsion = tuple(torsion)
    k = len(torsion)
    start = tuple(c % d for c, d in zip(x, torsion))
    ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    orbit = {start: ident}
    gens = _elementary_automorphisms(torsion)
    queue = deque([start])
    while queue:
        y = queue.popleft()
        my = orbit[y]
        for g in gens:
            z = tuple(sum(g[i][j] * y[j] for j in range(k)) % torsion[i] for i in range(k))
            if z in orbit:
                continue
            prod_rows = [[sum(g[i][t] * my[t][j] for t in range(k)) for j in range(k)]
                         for i in range(k)]
            orbit[z] = tuple(map(tuple, _reduce_rows(prod_rows, torsion)))
            if limit is not None and len(orbit) > limit:
                raise OrbitTooLarge(len(orbit))
            queue.append(z)
    return orbit


def check_isomorphism(m: IntMatrix, g: FgAb, h: FgAb) -> str | None:
    """None if ``m`` induces an isomorphism ``g -> h``, else the reason it does not."""
    if g.canonical() != h.canonical():
        return f"groups {g} and {h} are not isomorphic"
    if (m.rows, m.cols) != (h.ngens, g.ngens):
        return f"matrix is {m.rows}x{m.cols}, expected {h.ngens}x{g.ngens}"
    for j, dj in enumerate(g.moduli):
        if not dj:
            continue
        for i, ei in enumerate(h.moduli):
            if (ei == 0 and m[i, j] != 0) or (ei and (dj * m[i, j]) % ei):
                return f"column {j} does not respect the relation of order {dj}"
    relations = IntMatrix.from_columns(
        [[ei if r == i else 0 for r in range(h.ngens)] for i, ei in enumerate(h.moduli) if ei],
        rows=h.ngens)
    if not cokernel(m.hstack(relations)).is_trivial():
        return "induced map is not surjective"
    # a surjective endomorphism of a finitely generated abelian group is bijective
    return None


@dataclass(frozen=True)
class ScaledIsoResult:
    answer: str  # "Isomorphic" | "NotIsomorphic" | "Unknown"
    matrix: IntMatrix | None = None
    reason: str = ""


def _content(vec: Sequence[int]) -> int:
    g = 0
    for c in vec:
        g = gcd(g, c)
    return g


def find_scaled_automorphism(g: FgAb, x: Sequence[int], y: Sequence[int],
                             order_bound: int = 10_000) -> ScaledIsoResult:
    """Decide whether an automorphism of ``g`` maps ``x`` to ``y``.

    Automorphisms of ``Z^r + T`` are block lower triangular: an invertible
    integer block on the free part, an automorphism of ``T`` and an arbitrary
    map ``Z^r -> T``.  The free block can send ``x_free`` to any vector of
    the same content ``c``; the off-diagonal block contributes exactly
    ``c T``.  The only brute-force step is the orbit of ``x_tors`` in ``T``,
    which is refused beyond ``order_bound`` elements.
    """
    r = g.free_rank
    tors = g.torsion
    x, y = list(x), list(y)
    xf, xt = x[:r], [c % d for c, d in zip(x[r:], tors)]
    yf, yt = y[:r], [c % d for c, d in zip(y[r:], tors)]
    if g.torsion_order() > order_bound:
        return ScaledIsoResult("Unknown", reason=(
            f"torsion subgroup of order {g.torsion_order()} exceeds the orbit search "
            f"bound {order_bound}"))
    cx, cy = _content(xf), _content(yf)
    if cx != cy:
        return ScaledIsoResult("NotIsomorphic", reason=(
            f"free components have different content ({cx} vs {cy}); "
            "no automorphism relates them"))
    orbit = torsion_orbit(tors, xt)
    hit = None
    for z, mz in orbit.items():
        if all((b - a) % gcd(cx, d) == 0 for a, b, d in zip(z, yt, tors)):
            hit = (z, mz)
            break
    if hit is None:
        shift = f", up to the subgroup {cx}*T" if r else ""
        return ScaledIsoResult("NotIsomorphic", reason=(
            f"torsion components lie in different automorphism orbits "
            f"(orbit of size {len(orbit)} searched{shift})"))
    z, mz = hit
    if cx == 0:
        free_block = IntMatrix.identity(r)
        beta = [[0] * r for _ in tors]
    else:
        _, wx = unimodular_completion(xf)
        _, wy = unimodular_completion(yf)
        free_block = inverse_unimodular(wy) @ wx
        lam = wx.row(0)  # lam . xf == cx
        w = []
        for a, b, d in zip(z, yt, tors):
            h = gcd(cx, d)
            c = (b - a) % d // h
            dd = d // h
            w.append(c * pow(cx // h, -1, dd) % dd if dd > 1 else 0)
        beta = [[wi * lj for lj in lam] for wi in w]
    rows = [free_block.row(i) + [0] * len(tors) for i in range(r)]
    rows += [beta[i] + list(mz[i]) for i in range(len(tors))]
    rows = _reduce_rows(rows, g.moduli)
    cert = IntMatrix.from_rows(rows, cols=g.ngens)
    problem = check_isomorphism(cert, g, g)
    if problem or list(apply_hom(cert, g, x)) != [c % d if d else c for c, d in zip(y, g.moduli)]:
        raise AssertionError(f"internal error: certificate failed to verify ({problem})")
    return ScaledIsoResult("Isomorphic", cert)
