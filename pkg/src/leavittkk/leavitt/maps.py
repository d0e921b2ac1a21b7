"""Homomorphisms L(E) -> L(F) given by generator images.

A :class:`GeneratorMap` records where vertices and edges go; the images of
ghost edges are forced to be the adjoints.  :func:`verify_hom` checks the
defining relations in the target by normal-form equality and is the only way
to obtain a verified map.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping

from ..graph import Graph, graph_from_json, parse_graph, transpose_graph, transposed_edge_names
from .algebra import LeavittAlgebra, LeavittElement
from .parser import parse_element
from .tensor import TensorAlgebra, TensorElement

__all__ = [
    "MapError",
    "GeneratorMap",
    "HomReport",
    "RelationFailure",
    "DualityReport",
    "load_generator_map",
    "generator_map_from_json",
    "verify_hom",
    "duality_unitary",
    "twist_hom",
    "identity_map",
]


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorMap:
    source: Graph
    target: Graph
    vertex_images: Mapping[str, LeavittElement]
    edge_images: Mapping[str, LeavittElement]
    unital: bool | None = None  # claim; None means "do not assert"
    p_witness: LeavittElement | None = None
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        if set(self.vertex_images) != set(self.source.vertices):
            missing = set(self.source.vertices) ^ set(self.vertex_images)
            raise MapError(f"vertex images must cover exactly the source vertices; mismatch: "
                           f"{', '.join(sorted(missing))}")
        if set(self.edge_images) != {e.id for e in self.source.edges}:
            missing = {e.id for e in self.source.edges} ^ set(self.edge_images)
            raise MapError(f"edge images must cover exactly the source edges; mismatch: "
                           f"{', '.join(sorted(missing))}")
        for x in list(self.vertex_images.values()) + list(self.edge_images.values()):
            if x.graph != self.target:
                raise MapError("generator image does not live in the target algebra")

    @property
    def target_algebra(self) -> LeavittAlgebra:
        return next(iter(self.vertex_images.values())).algebra

    def image_of_one(self) -> LeavittElement:
        out = self.target_algebra.zero()
        for v in self.source.vertices:
            out = out + self.vertex_images[v]
        return out

    def to_json(self) -> dict:
        out = {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "vertex_images": {v: str(self.vertex_images[v].normal_form())
                              for v in self.source.vertices},
            "edge_images": {e.id: str(self.edge_images[e.id].normal_form())
                            for e in self.source.edges},
        }
        if self.unital is not None:
            out["unital"] = self.unital
        if self.p_witness is not None:
            out["p_witness"] = str(self.p_witness.normal_form())
        return out


def _load_graph(spec, base: Path | None) -> Graph:
    if isinstance(spec, dict):
        return graph_from_json(spec)
    if isinstance(spec, str):
        path = Path(spec)
        if base is not None and not path.is_absolute():
            path = base / path
        try:
            return parse_graph(path.read_text())
        except OSError as exc:
            raise MapError(f"cannot read graph file {path}: {exc.strerror}") from None
    raise MapError("graph must be an inline object or a file path")


def generator_map_from_json(data, base: Path | None = None) -> GeneratorMap:
    if not isinstance(data, dict):
        raise MapError("map file must contain a JSON object")
    for key in ("source", "target", "vertex_images", "edge_images"):
        if key not in data:
            raise MapError(f"map file lacks the {key!r} field")
    unknown = set(data) - {"source", "target", "vertex_images", "edge_images", "unital", "p_witness"}
    if unknown:
        raise MapError(f"unknown field(s) in map file: {', '.join(sorted(unknown))}")
    src = _load_graph(data["source"], base)
    tgt = _load_graph(data["target"], base)
    alg = LeavittAlgebra(tgt)

    def images(key):
        raw = data[key]
        if not isinstance(raw, dict) or not all(isinstance(v, str) for v in raw.values()):
            raise MapError(f"{key} must map names to expression strings")
        return {k: parse_element(alg, v) for k, v in raw.items()}

    unital = data.get("unital")
    if unital is not None and not isinstance(unital, bool):
        raise MapError("'unital' must be a boolean")
    witness = data.get("p_witness")
    if witness is not None:
        if not isinstance(witness, str):
            raise MapError("'p_witness' must be an expression string")
        witness = parse_element(alg, witness)
    return GeneratorMap(src, tgt, images("vertex_images"), images("edge_images"), unital, witness)


def load_generator_map(path: str | Path) -> GeneratorMap:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MapError(f"cannot read map file {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapError(f"map file is not valid JSON: {exc.msg} at line {exc.lineno}, "
                       f"column {exc.colno}") from None
    return generator_map_from_json(data, path.parent)


def identity_map(g: Graph) -> GeneratorMap:
    alg = LeavittAlgebra(g)
    return GeneratorMap(g, g, {v: alg.vertex(v) for v in g.vertices},
                        {e.id: alg.edge(e.id) for e in g.edges}, unital=True)


@dataclass(frozen=True)
class RelationFailure:
    relation: str
    residue: str  # normal form of lhs - rhs

    def to_json(self) -> dict:
        return {"relation": self.relation, "residue": self.residue}


@dataclass(frozen=True)
class HomReport:
    verified: bool
    unital: bool
    unital_claim: bool | None
    property_p: bool | None
    failures: tuple[RelationFailure, ...]
    checked: int
    notes: tuple[str, ...]
    map: GeneratorMap

    def to_json(self) -> dict:
        return {
            "verified": self.verified,
            "unital": self.unital,
            "unital_claim": self.unital_claim,
            "property_p": self.property_p,
            "relations_checked": self.checked,
            "failures": [f.to_json() for f in self.failures],
            "notes": list(self.notes),
        }

    def lines(self) -> list[str]:
        out = ["verified" if self.verified else "not verified",
               f"unital: {str(self.unital).lower()}"]
        if self.property_p is not None:
            out.append(f"property (P): {str(self.property_p).lower()}")
        out.append(f"relations checked: {self.checked}")
        out += [f"FAILED {f.relation}: residue {f.residue}" for f in self.failures]
        out += [f"note: {n}" for n in self.notes]
        return out


_P_NOTE = ("property (P) witness t is checked for t = phi(1) t and t^* t = 1; "
           "no condition on t t^* beyond that is imposed")


def verify_hom(m: GeneratorMap) -> HomReport:
    """Check the Cuntz-Krieger relations on the images of ``m``."""
    src = m.source
    alg = m.target_algebra
    phi_v, phi_e = m.vertex_images, m.edge_images
    failures: list[RelationFailure] = []
    count = 0

    def expect(name: str, lhs: LeavittElement, rhs: LeavittElement) -> bool:
        nonlocal count
        count += 1
        diff = lhs - rhs
        if diff.terms:
            failures.append(RelationFailure(name, str(diff)))
            return False
        return True

    for v in src.vertices:
        p = phi_v[v]
        expect(f"phi({v})^* = phi({v})", p.star(), p)
        expect(f"phi({v})^2 = phi({v})", p * p, p)
    for i, v in enumerate(src.vertices):
        for w in src.vertices[i + 1:]:
            expect(f"phi({v}) phi({w}) = 0", phi_v[v] * phi_v[w], alg.zero())
    for e in src.edges:
        x = phi_e[e.id]
        expect(f"phi({e.src}) phi({e.id}) = phi({e.id})", phi_v[e.src] * x, x)
        expect(f"phi({e.id}) phi({e.dst}) = phi({e.id})", x * phi_v[e.dst], x)
    for e in src.edges:
        for f in src.edges:
            rhs = phi_v[e.dst] if e.id == f.id else alg.zero()
            expect(f"phi({e.id})^* phi({f.id}) = {'phi(' + e.dst + ')' if e.id == f.id else '0'}",
                   phi_e[e.id].star() * phi_e[f.id], rhs)
    for v in src.vertices:
        outs = src.out_edges[v]
        if not outs:
            continue
        total = alg.zero()
        for e in outs:
            total = total + phi_e[e.id] * phi_e[e.id].star()
        expect(f"phi({v}) = sum over s(e)={v} of phi(e) phi(e)^*", phi_v[v], total)

    one = m.image_of_one()
    unital = (one - alg.one()).is_zero()
    if m.unital is not None and m.unital != unital:
        count += 1
        failures.append(RelationFailure(
            "sum of vertex images = 1" if m.unital else "sum of vertex images != 1",
            str(one - alg.one())))

    notes = []
    prop_p = None
    if m.p_witness is not None:
        t = m.p_witness
        ok1 = expect("p_witness = phi(1) p_witness", one * t, t)
        ok2 = expect("p_witness^* p_witness = 1", t.star() * t, alg.one())
        prop_p = ok1 and ok2
        notes.append(_P_NOTE)
    elif unital:
        prop_p = True
        notes.append("unital maps have property (P) with witness 1")

    verified = not failures
    return HomReport(verified, unital, m.unital, prop_p, tuple(failures), count, tuple(notes),
                     replace(m, verified=verified))


def _require_verified(m: GeneratorMap) -> GeneratorMap:
    if m.verified:
        return m
    report = verify_hom(m)
    if not report.verified:
        f = report.failures[0]
        raise MapError(f"map is not a *-homomorphism: {f.relation} fails (residue {f.residue})")
    return report.map


@dataclass(frozen=True)
class DualityReport:
    unitary: TensorElement
    is_unitary: bool
    u_ustar_residue: str
    ustar_u_residue: str
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {"u": str(self.unitary), "unitary": self.is_unitary,
                "u_ustar_minus_1": self.u_ustar_residue,
                "ustar_u_minus_1": self.ustar_u_residue, "notes": list(self.notes)}

    def lines(self) -> list[str]:
        out = [f"u = {self.unitary}", f"unitary: {str(self.is_unitary).lower()}"]
        if not self.is_unitary:
            out += [f"u u^* - 1 = {self.u_ustar_residue}", f"u^* u - 1 = {self.ustar_u_residue}"]
        out += [f"note: {n}" for n in self.notes]
        return out


def duality_unitary(m: GeneratorMap) -> DualityReport:
    """``1 (x) 1 - sum phi(v) (x) v + sum phi(e) (x) e_t^*`` in ``L(F) (x) L(E_t)``."""
    m = _require_verified(m)
    e = m.source
    et = transpose_graph(e)
    names = transposed_edge_names(e, et)
    right = LeavittAlgebra(et)
    ta = TensorAlgebra(m.target_algebra, right)
    u = ta.one()
    for v in e.vertices:
        u = u - ta.tensor(m.vertex_images[v], right.vertex(v))
    for edge in e.edges:
        u = u + ta.tensor(m.edge_images[edge.id], right.ghost(names[edge.id]))
    one = ta.one()
    r1 = u * u.star() - one
    r2 = u.star() * u - one
    notes = []
    sources = [v for v in e.vertices if not e.in_edges[v]]
    if sources:
        notes.append("source graph has sources (" + ", ".join(sources) + "); the formula is "
                     "meant for essential graphs, apply source removal first")
    if not m.unital:
        notes.append("map is not unital; unitarity is reported as computed")
    return DualityReport(u, r1.is_zero() and r2.is_zero(), str(r1), str(r2), tuple(notes))


def twist_hom(m: GeneratorMap, u: LeavittElement) -> GeneratorMap:
    """The map ``e -> u phi(e)``, ``v -> phi(v)`` for a unitary ``u`` of ``phi(1) L(F) phi(1)``.

    ``u`` must also commute with every vertex image; otherwise the twisted
    edges violate the source relation.
    """
    m = _require_verified(m)
    if u.graph != m.target:
        raise MapError("twisting element does not live in the target algebra")
    p = m.image_of_one()
    checks = [
        ("u^* u = phi(1)", u.star() * u - p),
        ("u u^* = phi(1)", u * u.star() - p),
        ("phi(1) u = u", p * u - u),
        ("u phi(1) = u", u * p - u),
    ]
    checks += [(f"u phi({v}) = phi({v}) u", u * m.vertex_images[v] - m.vertex_images[v] * u)
               for v in m.source.vertices]
    for name, residue in checks:
        if residue.terms:
            raise MapError(f"twisting element fails {name} (residue {residue})")
    twisted = GeneratorMap(m.source, m.target, dict(m.vertex_images),
                           {k: u * x for k, x in m.edge_images.items()}, m.unital, m.p_witness)
    report = verify_hom(twisted)
    if not report.verified:
        f = report.failures[0]
        raise AssertionError(f"internal error: twisted map fails {f.relation}")
    return report.map
