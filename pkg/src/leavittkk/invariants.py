"""K-theoretic invariants of finite regular graphs.

Bowen-Franks groups, K-theory of L(E) and C*(E), and the exact-sequence
data for kk(L(E), L(F)), KK(C*(E), C*(F)) and kk(L(E), A).  Extensions are
reported as (sub, quotient, total) with the total filled in only when the
sequence is forced to split.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .citations import cite
from .graph import Graph, GraphError, incidence_matrix, is_regular
from .intlin import (
    DivisiblePower,
    FgAb,
    GroupElement,
    IntMatrix,
    MixedGroup,
    cokernel,
    hom_group,
    kernel_basis,
    project_element,
    tensor_group,
    tensor_with_cstar,
)

__all__ = [
    "ScaledGroup",
    "KTheoryData",
    "ExtensionData",
    "CompIsoReport",
    "bowen_franks",
    "bowen_franks_dual",
    "k_theory",
    "kk_extension",
    "KK_extension",
    "kk_with_coefficients",
    "comp_kernel",
    "comp_is_iso",
    "require_regular",
    "k1_free_part",
]


def require_regular(*graphs: Graph) -> None:
    for g in graphs:
        if not g.vertices:
            raise GraphError("graph has no vertices")
        if not is_regular(g):
            sinks = [v for v in g.vertices if not g.out_edges[v]]
            raise GraphError(f"graph is not regular; sinks: {', '.join(sinks)}")


def _one_minus_at(g: Graph) -> IntMatrix:
    a = incidence_matrix(g)
    return IntMatrix.identity(a.rows) - a.T


@dataclass(frozen=True)
class ScaledGroup:
    group: FgAb
    scale: GroupElement

    def __post_init__(self):
        if self.scale.owner != self.group:
            raise ValueError("scale does not belong to the group")

    def __str__(self) -> str:
        return f"{self.group} (scale: {self.scale.describe()})"

    def to_json(self) -> dict:
        return {"group": str(self.group), "scale": list(self.scale.coords),
                "scale_display": self.scale.describe()}


def bowen_franks(g: Graph) -> ScaledGroup:
    """``coker(I - A^t)`` scaled by the class of the all-ones vector."""
    require_regular(g)
    grp = cokernel(_one_minus_at(g))
    return ScaledGroup(grp, project_element(grp, [1] * len(g.vertices)))


def bowen_franks_dual(g: Graph) -> FgAb:
    require_regular(g)
    a = incidence_matrix(g)
    return cokernel(IntMatrix.identity(a.rows) - a)


def k1_free_part(g: Graph) -> FgAb:
    """``ker(I - A^t)``, a free group."""
    return FgAb(kernel_basis(_one_minus_at(g)).cols)


@dataclass(frozen=True)
class KTheoryData:
    flavor: str
    k0: ScaledGroup
    k1_free: FgAb
    k1_divisible: DivisiblePower | None = None

    def __post_init__(self):
        if not self.k1_free.is_free():
            raise ValueError("free part of K_1 has torsion")
        if self.k1_divisible is not None and self.k1_divisible.rank != self.k0.group.free_rank:
            raise ValueError("divisible part of K_1 must have rank of K_0")

    @property
    def k1(self) -> MixedGroup:
        return MixedGroup(self.k1_free, self.k1_divisible or DivisiblePower(0))

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "k0": self.k0.to_json(),
            "k1": str(self.k1),
            "k1_free": str(self.k1_free),
            "k1_divisible": None if self.k1_divisible is None else str(self.k1_divisible),
            "citations": cite("bowen-franks", "scale", "k1-split"),
        }


def k_theory(g: Graph, flavor: str = "topological") -> KTheoryData:
    """K_0 and K_1 of C*(E) (``topological``) or L(E) (``algebraic``)."""
    if flavor in ("top", "topological"):
        flavor = "topological"
    elif flavor in ("alg", "algebraic"):
        flavor = "algebraic"
    else:
        raise ValueError(f"unknown K-theory flavor {flavor!r}")
    k0 = bowen_franks(g)
    div = tensor_with_cstar(k0.group) if flavor == "algebraic" else None
    return KTheoryData(flavor, k0, k1_free_part(g), div)


@dataclass(frozen=True)
class ExtensionData:
    """``0 -> sub -> ? -> quotient -> 0`` with the middle term when it is forced."""

    sub: MixedGroup
    quotient: FgAb
    total: MixedGroup | None
    split: str  # "Yes" or "Unknown"
    citations: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "sub": str(self.sub),
            "quotient": str(self.quotient),
            "total": None if self.total is None else str(self.total),
            "split": self.split,
            "citations": list(self.citations),
            "notes": list(self.notes),
        }

    def lines(self) -> list[str]:
        out = [f"sub      = {self.sub}", f"quotient = {self.quotient}",
               f"total    = {self.total if self.total is not None else 'undetermined'}",
               f"split    = {self.split}"]
        out += [f"note: {n}" for n in self.notes]
        out += [f"cite: {c}" for c in self.citations]
        return out


def _extension(sub: MixedGroup, quotient: FgAb, citations, notes=()) -> ExtensionData:
    # a free quotient splits the sequence; a zero sub makes it trivially exact
    if quotient.is_free() or sub.is_trivial():
        return ExtensionData(sub, quotient, sub + MixedGroup(quotient.canonical()), "Yes",
                             tuple(citations), tuple(notes))
    return ExtensionData(sub, quotient, None, "Unknown", tuple(citations), tuple(notes))


def kk_extension(e: Graph, f: Graph) -> ExtensionData:
    """The exact row for ``kk(L(E), L(F))``.

    The sub term ``BF(E)^dual (x) K_1(L(F))`` is expanded through the split
    ``K_1(L(F)) = (BF(F) (x) C*) + ker(I - A_F^t)``.
    """
    require_regular(e, f)
    dual_e = bowen_franks_dual(e).canonical()
    bf_e = bowen_franks(e).group.canonical()
    bf_f = bowen_franks(f).group.canonical()
    sub = MixedGroup(tensor_group(dual_e, k1_free_part(f)),
                     tensor_with_cstar(tensor_group(dual_e, bf_f)))
    return _extension(sub, hom_group(bf_e, bf_f), cite("kk-row", "k1-split"))


_KK_NOTE = (
    "sub term taken literally as BF(E) (x) ker(I - A_F^t); the parallel kk row uses "
    "BF(E)^dual. The two are abstractly isomorphic because I - A and its transpose have "
    "the same Smith form, so only naturality is affected")


def KK_extension(e: Graph, f: Graph) -> ExtensionData:
    """The exact row for ``KK(C*(E), C*(F))``."""
    require_regular(e, f)
    bf_e = bowen_franks(e).group.canonical()
    bf_f = bowen_franks(f).group.canonical()
    sub = MixedGroup(tensor_group(bf_e, k1_free_part(f)))
    return _extension(sub, hom_group(bf_e, bf_f), cite("KK-row"), [_KK_NOTE])


def kk_with_coefficients(e: Graph, g0: FgAb, g1: FgAb) -> ExtensionData:
    """``kk(L(E), A)`` for an algebra with ``KH_0(A) = g0`` and ``KH_1(A) = g1``."""
    require_regular(e)
    dual_e = bowen_franks_dual(e).canonical()
    bf_e = bowen_franks(e).group.canonical()
    sub = MixedGroup(tensor_group(dual_e, g1.canonical()))
    return _extension(sub, hom_group(bf_e, g0.canonical()), cite("kk-coefficients"))


def comp_kernel(e: Graph, f: Graph) -> DivisiblePower:
    """Kernel ``BF(E)^dual (x) BF(F) (x) C*`` of completion on kk."""
    require_regular(e, f)
    return tensor_with_cstar(tensor_group(bowen_franks_dual(e), bowen_franks(f).group))


@dataclass(frozen=True)
class CompIsoReport:
    iso: bool
    bf_e: FgAb
    bf_f: FgAb
    kernel: DivisiblePower
    citations: tuple[str, ...]

    def to_json(self) -> dict:
        return {"iso": self.iso, "bf_e": str(self.bf_e), "bf_f": str(self.bf_f),
                "kernel": str(self.kernel), "citations": list(self.citations)}

    def lines(self) -> list[str]:
        return ([str(self.iso).lower(), f"BF(E) = {self.bf_e}", f"BF(F) = {self.bf_f}",
                 f"ker(comp) = {self.kernel}"] + [f"cite: {c}" for c in self.citations])


def comp_is_iso(e: Graph, f: Graph) -> CompIsoReport:
    ker = comp_kernel(e, f)
    return CompIsoReport(
        ker.is_trivial(),
        bowen_franks(e).group.canonical(),
        bowen_franks(f).group.canonical(),
        ker,
        tuple(cite("comp-iso", "comp-kernel", "comp-conservative")),
    )

