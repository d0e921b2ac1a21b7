"""Pure infiniteness, scaled K_0 classification, and homotopy data of maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice

import networkx as nx

from .citations import cite
from .graph import Graph, GraphError
from .intlin import (
    DivisiblePower,
    FgAb,
    IntMatrix,
    apply_hom,
    check_isomorphism,
    find_scaled_automorphism,
    generator_lifts,
    project_element,
)
from .invariants import (
    ExtensionData,
    KK_extension,
    _one_minus_at,
    bowen_franks,
    comp_is_iso,
    comp_kernel,
    kk_extension,
    require_regular,
)
from .leavitt.coefficients import is_real_integer
from .leavitt.maps import GeneratorMap, MapError, verify_hom

__all__ = [
    "SpiError",
    "SpiReport",
    "spi_check",
    "ClassifyVerdict",
    "kp_classify",
    "LiftReport",
    "lift_report",
    "K0MapReport",
    "k0_of_generator_map",
    "HomotopyReport",
    "is_homotopy_equivalence",
    "CYCLE_CAP",
]

CYCLE_CAP = 1_000_000


class SpiError(GraphError):
    """Raised when a decision needs spi graphs and is handed something else."""


class CycleLimitExceeded(GraphError):
    pass


@dataclass(frozen=True)
class SpiReport:
    condition_L: bool
    hereditary_saturated_trivial: bool
    every_vertex_to_cycle: bool
    cycle_without_exit: tuple[str, ...] | None = None
    nontrivial_hereditary_saturated: tuple[str, ...] | None = None
    stranded_vertex: str | None = None
    cycles_examined: int = 0

    @property
    def spi(self) -> bool:
        return self.condition_L and self.hereditary_saturated_trivial and self.every_vertex_to_cycle

    def to_json(self) -> dict:
        return {
            "spi": self.spi,
            "condition_L": self.condition_L,
            "hereditary_saturated_trivial": self.hereditary_saturated_trivial,
            "every_vertex_to_cycle": self.every_vertex_to_cycle,
            "witnesses": {
                "cycle_without_exit": (None if self.cycle_without_exit is None
                                       else list(self.cycle_without_exit)),
                "nontrivial_hereditary_saturated": (
                    None if self.nontrivial_hereditary_saturated is None
                    else list(self.nontrivial_hereditary_saturated)),
                "stranded_vertex": self.stranded_vertex,
            },
            "citations": cite("spi"),
        }

    def lines(self) -> list[str]:
        def flag(b):
            return "yes" if b else "no"
        out = [f"spi: {str(self.spi).lower()}",
               f"every cycle has an exit: {flag(self.condition_L)}"]
        if self.cycle_without_exit is not None:
            out.append(f"  cycle without exit through: {' -> '.join(self.cycle_without_exit)}")
        out.append("hereditary saturated sets trivial: "
                   f"{flag(self.hereditary_saturated_trivial)}")
        if self.nontrivial_hereditary_saturated is not None:
            out.append("  nontrivial hereditary saturated set: {"
                       + ", ".join(self.nontrivial_hereditary_saturated) + "}")
        out.append(f"every vertex connects to a cycle: {flag(self.every_vertex_to_cycle)}")
        if self.stranded_vertex is not None:
            out.append(f"  stranded vertex: {self.stranded_vertex}")
        return out


def _digraph(g: Graph) -> nx.DiGraph:
    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    d.add_edges_from((e.src, e.dst) for e in g.edges)
    return d


def _hereditary_saturated_closure(g: Graph, seed: set[str]) -> set[str]:
    h = set(seed)
    while True:
        grown = set(h)
        for v in h:
            grown.update(e.dst for e in g.out_edges[v])
        for v in g.vertices:
            outs = g.out_edges[v]
            if v not in grown and outs and all(e.dst in grown for e in outs):
                grown.add(v)
        if grown == h:
            return h
        h = grown


def spi_check(g: Graph, cycle_cap: int = CYCLE_CAP) -> SpiReport:
    require_regular(g)
    d = _digraph(g)
    outdeg = {v: len(g.out_edges[v]) for v in g.vertices}

    # A vertex on a simple cycle uses one outgoing edge of it; any other is an exit.
    no_exit = None
    on_cycle: set[str] = set()
    count = 0
    for cyc in islice(nx.simple_cycles(d), cycle_cap + 1):
        count += 1
        if count > cycle_cap:
            raise CycleLimitExceeded(f"more than {cycle_cap} simple cycles; raise the cap")
        on_cycle.update(cyc)
        if no_exit is None and all(outdeg[v] == 1 for v in cyc):
            no_exit = tuple(cyc) + (cyc[0],)

    nontrivial = None
    for v in g.vertices:
        h = _hereditary_saturated_closure(g, {v})
        if len(h) < len(g.vertices):
            nontrivial = tuple(w for w in g.vertices if w in h)
            break

    stranded = None
    for v in g.vertices:
        reach = nx.descendants(d, v) | {v}
        if not reach & on_cycle:
            stranded = v
            break

    return SpiReport(no_exit is None, nontrivial is None, stranded is None,
                     no_exit, nontrivial, stranded, count)


def require_spi(*graphs: Graph) -> None:
    for g in graphs:
        rep = spi_check(g)
        if not rep.spi:
            failed = [name for name, ok in (
                ("a cycle has no exit", rep.condition_L),
                ("a nontrivial hereditary saturated set exists", rep.hereditary_saturated_trivial),
                ("a vertex does not connect to a cycle", rep.every_vertex_to_cycle)) if not ok]
            raise SpiError("graph is not spi: " + "; ".join(failed))


@dataclass(frozen=True)
class ClassifyVerdict:
    answer: str  # Isomorphic | NotIsomorphic | Unknown
    bf_e: FgAb
    bf_f: FgAb
    scale_e: tuple[int, ...]
    scale_f: tuple[int, ...]
    certificate: IntMatrix | None = None
    reason: str = ""
    bound: int | None = None

    def verify(self) -> bool:
        """Re-check an Isomorphic certificate from scratch."""
        if self.certificate is None:
            return False
        if check_isomorphism(self.certificate, self.bf_e, self.bf_f) is not None:
            return False
        target = [c % d if d else c for c, d in zip(self.scale_f, self.bf_f.moduli)]
        return list(apply_hom(self.certificate, self.bf_f, self.scale_e)) == target

    def to_json(self) -> dict:
        return {
            "answer": self.answer,
            "bf_e": str(self.bf_e),
            "bf_f": str(self.bf_f),
            "scale_e": list(self.scale_e),
            "scale_f": list(self.scale_f),
            "certificate": None if self.certificate is None else self.certificate.to_rows(),
            "reason": self.reason,
            "bound": self.bound,
            "citations": cite("kirchberg-phillips", "scale"),
        }

    def lines(self) -> list[str]:
        out = [self.answer,
               f"BF(E) = {self.bf_e} (scale {list(self.scale_e)})",
               f"BF(F) = {self.bf_f} (scale {list(self.scale_f)})"]
        if self.certificate is not None:
            out.append(f"certificate: {self.certificate.to_rows()}")
        if self.reason:
            out.append(f"reason: {self.reason}")
        return out


def kp_classify(e: Graph, f: Graph, order_bound: int = 10_000) -> ClassifyVerdict:
    """Is there a group isomorphism BF(e) -> BF(f) carrying scale to scale?

    Canonical coordinates of equal canonical forms are identified, so the
    question becomes whether some automorphism of the common group moves one
    scale onto the other.  That is decided exactly; the only refusal is a
    torsion subgroup larger than ``order_bound``.
    """
    require_spi(e, f)
    se, sf = bowen_franks(e), bowen_franks(f)
    ge, gf = se.group, sf.group
    xe, xf = se.scale.coords, sf.scale.coords
    if ge.canonical() != gf.canonical():
        return ClassifyVerdict("NotIsomorphic", ge.canonical(), gf.canonical(), xe, xf,
                               reason=f"groups differ: {ge} vs {gf}")
    res = find_scaled_automorphism(gf.canonical(), xe, xf, order_bound)
    verdict = ClassifyVerdict(res.answer, ge.canonical(), gf.canonical(), xe, xf,
                              res.matrix, res.reason,
                              order_bound if res.answer == "Unknown" else None)
    if verdict.answer == "Isomorphic" and not verdict.verify():
        raise AssertionError("internal error: classification certificate does not verify")
    return verdict


@dataclass(frozen=True)
class LiftReport:
    cstar_classes: ExtensionData
    leavitt_classes: ExtensionData
    fiber: DivisiblePower
    unique_lifting: bool
    citations: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "cstar_classes": self.cstar_classes.to_json(),
            "leavitt_classes": self.leavitt_classes.to_json(),
            "fiber": str(self.fiber),
            "unique_lifting": self.unique_lifting,
            "citations": list(self.citations),
        }

    def lines(self) -> list[str]:
        out = ["[[C*(E),C*(F)]]_M2 minus 0, as KK(C*(E),C*(F)):"]
        out += ["  " + s for s in self.cstar_classes.lines() if not s.startswith(("cite", "note"))]
        out.append("[L(E),L(F)]_M2 minus 0, as kk(L(E),L(F)):")
        out += ["  " + s for s in self.leavitt_classes.lines() if not s.startswith(("cite", "note"))]
        out.append(f"fiber of completion: {self.fiber}")
        out.append(f"every homotopy class lifts uniquely: {str(self.unique_lifting).lower()}")
        out += [f"cite: {c}" for c in self.citations]
        return out


def lift_report(e: Graph, f: Graph) -> LiftReport:
    require_spi(e, f)
    iso = comp_is_iso(e, f).iso
    keys = ["lifting", "homotopy-classes"] + (["unique-lifting"] if iso else [])
    return LiftReport(KK_extension(e, f), kk_extension(e, f), comp_kernel(e, f), iso,
                      tuple(cite(*keys)))


@dataclass(frozen=True)
class K0MapReport:
    supported: bool
    bf_e: FgAb
    bf_f: FgAb
    matrix: IntMatrix | None = None
    vertex_classes: dict = field(default_factory=dict)
    scale_image: tuple[int, ...] | None = None
    scale_f: tuple[int, ...] | None = None
    reason: str = ""

    def is_bijective(self) -> bool:
        return self.matrix is not None and check_isomorphism(self.matrix, self.bf_e, self.bf_f) is None

    def to_json(self) -> dict:
        return {
            "supported": self.supported,
            "bf_e": str(self.bf_e),
            "bf_f": str(self.bf_f),
            "matrix": None if self.matrix is None else self.matrix.to_rows(),
            "vertex_classes": {v: list(c) for v, c in self.vertex_classes.items()},
            "scale_image": None if self.scale_image is None else list(self.scale_image),
            "scale_f": None if self.scale_f is None else list(self.scale_f),
            "bijective": self.is_bijective() if self.supported else None,
            "reason": self.reason,
        }


def _vertex_class(x, target: Graph) -> list[int] | None:
    """Class in Z^{F^0} of an element of the diagonal subalgebra, via [p p^*] = [r(p)]."""
    vec = [0] * len(target.vertices)
    idx = target.vertex_index
    for m, c in x.normal_form().terms.items():
        if m.p != m.q or not is_real_integer(c):
            return None
        vec[idx[m.vertex]] += int(c.x)
    return vec


def k0_of_generator_map(m: GeneratorMap) -> K0MapReport:
    """The map BF(E) -> BF(F) induced on K_0 by a verified generator map."""
    if not m.verified:
        raise MapError("map must be verified first")
    e, f = m.source, m.target
    se, sf = bowen_franks(e), bowen_franks(f)
    ge, gf = se.group, sf.group
    classes = {}
    for v in e.vertices:
        c = _vertex_class(m.vertex_images[v], f)
        if c is None:
            return K0MapReport(False, ge.canonical(), gf.canonical(), reason=(
                f"image of {v} is not an integer combination of monomials p p^*"))
        classes[v] = c

    def push(ambient_e):
        out = [0] * len(f.vertices)
        for coeff_v, v in zip(ambient_e, e.vertices):
            for k, cv in enumerate(classes[v]):
                out[k] += coeff_v * cv
        return out

    # relations of BF(E) must die in BF(F)
    rel = _one_minus_at(e)
    for col in rel.columns():
        if not project_element(gf, push(col)).is_zero():
            raise AssertionError("internal error: vertex classes do not respect the relations")
    cols = [list(project_element(gf, push(lift)).coords) for lift in generator_lifts(ge)]
    mat = IntMatrix.from_columns(cols, rows=gf.ngens)
    scale_img = project_element(gf, push([1] * len(e.vertices))).coords
    return K0MapReport(True, ge.canonical(), gf.canonical(), mat, classes, scale_img,
                       sf.scale.coords)


@dataclass(frozen=True)
class HomotopyReport:
    answer: str  # Yes | No | Unknown
    k0: K0MapReport | None
    reason: str
    citations: tuple[str, ...]

    def to_json(self) -> dict:
        return {"answer": self.answer, "k0": None if self.k0 is None else self.k0.to_json(),
                "reason": self.reason, "citations": list(self.citations)}

    def lines(self) -> list[str]:
        out = [self.answer, f"reason: {self.reason}"]
        if self.k0 is not None and self.k0.matrix is not None:
            out.append(f"K_0 map {self.k0.bf_e} -> {self.k0.bf_f}: {self.k0.matrix.to_rows()}")
        out += [f"cite: {c}" for c in self.citations]
        return out


def is_homotopy_equivalence(m: GeneratorMap) -> HomotopyReport:
    """Decide whether the completion of ``m`` is an M_2-homotopy equivalence.

    Only the finite Bowen-Franks case is decided: there K_1 vanishes and the
    completion functor is an isomorphism on kk, so the class of ``m`` is an
    equivalence exactly when its K_0 map is bijective.
    """
    if not m.verified:
        rep = verify_hom(m)
        if not rep.verified:
            raise MapError("map is not a verified *-homomorphism")
        m = rep.map
    refs = tuple(cite("homotopy-equivalence", "comp-conservative"))
    for g in (m.source, m.target):
        require_regular(g)
    k0 = k0_of_generator_map(m)
    if not (k0.bf_e.is_finite() and k0.bf_f.is_finite()):
        return HomotopyReport("Unknown", k0, "a Bowen-Franks group is infinite; K_1 data "
                              "would be needed", refs)
    if not k0.supported:
        return HomotopyReport("Unknown", k0, k0.reason, refs)
    if not k0.is_bijective():
        return HomotopyReport("No", k0, "induced map on K_0 is not bijective", refs)
    for g in (m.source, m.target):
        if not spi_check(g).spi:
            return HomotopyReport("Unknown", k0, "graphs must be spi for the criterion", refs)
    rep = verify_hom(m)
    if not rep.property_p:
        return HomotopyReport("Unknown", k0, "property (P) is not established; supply a "
                              "p_witness or a unital map", refs)
    return HomotopyReport("Yes", k0, "K_0 map is bijective between finite groups and the map "
                          "has property (P)", refs)
