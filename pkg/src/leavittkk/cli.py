"""Command line interface.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 unknown
verdict, 64 usage error, 65 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import __version__
from .citations import CITATIONS
from .classify import is_homotopy_equivalence, kp_classify, lift_report, spi_check
from .graph import Graph, GraphError, cuntz_splice, parse_graph, rose, serialize_graph
from .intlin import parse_group
from .invariants import (
    KK_extension,
    bowen_franks,
    bowen_franks_dual,
    comp_is_iso,
    comp_kernel,
    k_theory,
    kk_extension,
    kk_with_coefficients,
)
from .leavitt import (
    ElementSyntaxError,
    LeavittAlgebra,
    MapError,
    RewriteLimitExceeded,
    duality_unitary,
    format_coeff,
    load_generator_map,
    twist_hom,
    verify_hom,
)

EX_OK, EX_NEGATIVE, EX_UNKNOWN, EX_USAGE, EX_DATAERR = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class GraphArg:
    """A graph given as a file path or as an inline JSON literal."""

    def __init__(self, text: str):
        self.text = text
        self.inline = text.lstrip().startswith("{")

    def check(self) -> None:
        if not self.inline and not Path(self.text).is_file():
            raise FileNotFoundError(self.text)

    def load(self) -> Graph:
        if self.inline:
            return parse_graph(self.text)
        return parse_graph(Path(self.text).read_text())


class FileArg(GraphArg):
    def __init__(self, text: str):
        self.text = text
        self.inline = False


# -- output helpers ----------------------------------------------------------------


class Result:
    def __init__(self, text: str | list[str], data, code: int = EX_OK):
        self.text = text if isinstance(text, str) else "\n".join(text)
        self.data = data
        self.code = code


def _element_json(x) -> dict:
    nf = x.normal_form()
    return {
        "normal_form": str(nf),
        "terms": [{"p": list(m.p), "q": list(m.q), "vertex": m.vertex,
                   "coeff": format_coeff(c)} for m, c in nf.sorted_terms()],
    }


# -- subcommands -------------------------------------------------------------------


def cmd_bf(a):
    sg = bowen_franks(a.graph.load())
    return Result(str(sg), sg.to_json())


def cmd_bf_dual(a):
    grp = bowen_franks_dual(a.graph.load())
    return Result(str(grp), {"group": str(grp)})


def cmd_ktheory(a):
    kt = k_theory(a.graph.load(), a.flavor)
    return Result([f"K_0 = {kt.k0}", f"K_1 = {kt.k1}"], kt.to_json())


def _ext(data):
    return Result(data.lines(), data.to_json())


def cmd_kk(a):
    return _ext(kk_extension(a.e.load(), a.f.load()))


def cmd_KK(a):
    return _ext(KK_extension(a.e.load(), a.f.load()))


def cmd_kk_coeff(a):
    g0, g1 = parse_group(a.g0), parse_group(a.g1)
    return _ext(kk_with_coefficients(a.e.load(), g0, g1))


def cmd_comp_kernel(a):
    k = comp_kernel(a.e.load(), a.f.load())
    return Result(str(k), {"kernel": str(k), "rank": k.rank})


def cmd_comp_iso(a):
    rep = comp_is_iso(a.e.load(), a.f.load())
    return Result(rep.lines(), rep.to_json(), EX_OK if rep.iso else EX_NEGATIVE)


def cmd_spi(a):
    rep = spi_check(a.graph.load())
    return Result(rep.lines(), rep.to_json(), EX_OK if rep.spi else EX_NEGATIVE)


def cmd_classify(a):
    v = kp_classify(a.e.load(), a.f.load(), order_bound=a.bound)
    code = {"Isomorphic": EX_OK, "NotIsomorphic": EX_NEGATIVE}.get(v.answer, EX_UNKNOWN)
    return Result(v.lines(), v.to_json(), code)


def cmd_lift_report(a):
    rep = lift_report(a.e.load(), a.f.load())
    return Result(rep.lines(), rep.to_json())


def cmd_splice(a):
    g = cuntz_splice(a.graph.load(), a.vertex)
    return Result(serialize_graph(g), g.to_json())


def cmd_rose(a):
    g = rose(a.n)
    return Result(serialize_graph(g), g.to_json())


def cmd_element_nf(a):
    alg = LeavittAlgebra(a.graph.load())
    x = alg.parse(a.expr)
    data = {"input": a.expr, **_element_json(x)}
    return Result(data["normal_form"], data)


def cmd_verify_hom(a):
    rep = verify_hom(load_generator_map(a.map.text))
    return Result(rep.lines(), rep.to_json(), EX_OK if rep.verified else EX_NEGATIVE)


def cmd_duality(a):
    rep = duality_unitary(load_generator_map(a.map.text))
    return Result(rep.lines(), rep.to_json(), EX_OK if rep.is_unitary else EX_NEGATIVE)


def cmd_twist(a):
    m = load_generator_map(a.map.text)
    u = LeavittAlgebra(m.target).parse(a.u)
    tw = twist_hom(m, u)
    data = tw.to_json()
    data["verified"] = tw.verified
    lines = [f"{k} -> {v}" for k, v in data["vertex_images"].items()]
    lines += [f"{k} -> {v}" for k, v in data["edge_images"].items()]
    lines.append("verified" if tw.verified else "not verified")
    return Result(lines, data)


def cmd_homotopy(a):
    rep = is_homotopy_equivalence(load_generator_map(a.map.text))
    code = {"Yes": EX_OK, "No": EX_NEGATIVE}.get(rep.answer, EX_UNKNOWN)
    return Result(rep.lines(), rep.to_json(), code)


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", dest="sub_format", choices=["text", "json"], default=None,
                     help="output format (default text)")

    p = _Parser(prog="leavittkk", description=(
        "K-theoretic invariants of graph algebras and exact computation in Leavitt path "
        "algebras. Graph arguments are file paths or inline JSON literals."))
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--version", action="version", version=f"leavittkk {__version__}")
    p.add_argument("--cite", action="store_true", help="print the anchor strings used in reports")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name: str, fn: Callable, help_: str, *graphs: str):
        sp = sub.add_parser(name, parents=[fmt], help=help_, description=help_)
        for g in graphs:
            sp.add_argument(g, type=GraphArg)
        sp.set_defaults(func=fn)
        return sp

    add("bf", cmd_bf, "Bowen-Franks group coker(I - A^t) with its scale", "graph")
    add("bf-dual", cmd_bf_dual, "dual Bowen-Franks group coker(I - A)", "graph")
    add("ktheory", cmd_ktheory, "K_0 and K_1 of C*(E) or L(E)", "graph").add_argument(
        "--flavor", choices=["alg", "algebraic", "top", "topological"], default="top")
    add("kk", cmd_kk, "exact row computing kk(L(E), L(F))", "e", "f")
    add("KK", cmd_KK, "exact row computing KK(C*(E), C*(F))", "e", "f")
    sp = add("kk-coeff", cmd_kk_coeff, "exact row computing kk(L(E), A) from KH_0(A), KH_1(A)", "e")
    sp.add_argument("--g0", required=True, help="KH_0(A), e.g. 'Z^2+Z/6'")
    sp.add_argument("--g1", required=True, help="KH_1(A)")
    add("comp-kernel", cmd_comp_kernel, "kernel of kk -> KK", "e", "f")
    add("comp-iso", cmd_comp_iso, "is kk(L(E),L(F)) -> KK(C*(E),C*(F)) an isomorphism", "e", "f")
    add("spi", cmd_spi, "check simple pure infiniteness", "graph")
    add("classify", cmd_classify, "compare scaled Bowen-Franks groups of spi graphs",
        "e", "f").add_argument("--bound", type=int, default=10_000,
                               help="largest torsion subgroup searched for orbits")
    add("lift-report", cmd_lift_report, "homotopy class groups and lifting of maps", "e", "f")
    add("splice", cmd_splice, "Cuntz splice at a vertex", "graph").add_argument("vertex")
    add("rose", cmd_rose, "graph with one vertex and n loops").add_argument("n", type=int)
    add("element-nf", cmd_element_nf, "normal form of an element of L(E)", "graph").add_argument(
        "expr")
    for name, fn, help_ in (
            ("verify-hom", cmd_verify_hom, "verify a generator map"),
            ("duality-unitary", cmd_duality, "build and test the duality unitary of a map"),
            ("homotopy-equivalence", cmd_homotopy,
             "decide whether a map is a homotopy equivalence (finite Bowen-Franks case)")):
        sub.add_parser(name, parents=[fmt], help=help_, description=help_).set_defaults(func=fn)
        sub.choices[name].add_argument("map", type=FileArg)
    sp = sub.add_parser("twist", parents=[fmt], help="twist a map by a unitary",
                        description="twist a map by a unitary of the corner phi(1) L(F) phi(1)")
    sp.add_argument("map", type=FileArg)
    sp.add_argument("u")
    sp.set_defaults(func=cmd_twist)
    return p


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit(stderr, str(exc))
        return EX_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    if args.cite:
        _emit(stdout, "\n".join(f"[{k}] {v}" for k, v in CITATIONS.items()))
        return EX_OK
    if args.command is None:
        _emit(stderr, parser.format_usage().rstrip())
        return EX_USAGE
    fmt = args.sub_format or args.format

    for value in vars(args).values():
        if isinstance(value, GraphArg):
            try:
                value.check()
            except FileNotFoundError:
                _emit(stderr, f"leavittkk: no such file: {value.text}")
                return EX_DATAERR

    try:
        res = args.func(args)
    except UsageError as exc:
        _emit(stderr, f"leavittkk: {exc}")
        return EX_USAGE
    except (GraphError, ElementSyntaxError, MapError, RewriteLimitExceeded, ValueError,
            KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        _emit(stderr, f"leavittkk: error: {msg}")
        return EX_DATAERR
    if fmt == "json":
        _emit(stdout, json.dumps(res.data, indent=2, sort_keys=True))
    else:
        _emit(stdout, res.text)
    return res.code


def main() -> None:
    sys.exit(run())
