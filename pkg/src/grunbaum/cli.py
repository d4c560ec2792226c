"""Command-line interface.

Exit status: 0 on success, 1 when a valid query has a negative answer
(printed as ``NONE``), 2 for malformed input, bad flags or violated
preconditions.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import formats, kernel
from .coloring import (
    FacetTwoColoring,
    GrunbaumColoring,
    VertexColoring,
    count_grunbaum_nonisomorphic,
    exact_grunbaum,
    facet_two_coloring,
    grunbaum_from_two_coloring,
    grunbaum_from_vertex4,
    grunbaum_tripartite,
    quadrangulate,
    vertex_classes,
    vertex_coloring_exact,
    verify_grunbaum,
)
from .complex import (
    AUTOMORPHISM_BOUND,
    Triangulation,
    automorphisms,
    euler_characteristic,
    f_vector,
    is_even,
    is_orientable,
    validate,
)
from .errors import BadDimension, GrunbaumError, ParseError
from .generators import barycentric_subdivision, bipyramidal_crown, catalog, cross_polytope, glue
from .graph import SimpleGraph, bridges, facet_adjacency, is_connected, is_snark

EXIT_OK, EXIT_NONE, EXIT_ERROR = 0, 1, 2


class _Out:
    """Collects the primary output and writes it to stdout or ``-o``."""

    def __init__(self, args):
        self.args = args

    def emit(self, text: str, obj: dict) -> None:
        if self.args.json:
            obj = {"seed": self.args.seed, **obj}
            text = formats.dump_json(obj)
        path = getattr(self.args, "output", "-")
        if path in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(path, "w") as fh:
                fh.write(text)

    def none(self, reason: str) -> int:
        self.emit(f"# seed: {self.args.seed}\nNONE {reason}\n",
                  {"type": "verdict", "verdict": "NONE", "reason": reason})
        return EXIT_NONE


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_complex(path: str) -> Triangulation:
    return formats.parse_complex(_read(path))


def _load_coloring(path: str, want):
    c, _ = formats.parse_coloring(_read(path))
    if not isinstance(c, want):
        raise ParseError(f"{path}: expected a {want.__name__} file")
    return c


def _write_side_coloring(args, c, dim: int, T: Triangulation) -> None:
    if args.coloring_out:
        with open(args.coloring_out, "w") as fh:
            fh.write(formats.format_coloring(c, dim, formats.file_labels(T), args.seed))


def _complex_with_coloring(out: _Out, args, T: Triangulation, c) -> int:
    lab = formats.file_labels(T)
    _write_side_coloring(args, c, T.dimension, T)
    out.emit(formats.format_complex(T, args.seed),
             {"complex": formats.complex_json(T),
              "coloring": formats.coloring_json(c, T.dimension, lab)})
    return EXIT_OK


def _emit_coloring(out: _Out, args, T: Triangulation, c) -> int:
    lab = formats.file_labels(T)
    out.emit(formats.format_coloring(c, T.dimension, lab, args.seed),
             formats.coloring_json(c, T.dimension, lab))
    return EXIT_OK


# -- subcommands -------------------------------------------------------------

def cmd_validate(args, out: _Out) -> int:
    n, facets = formats.read_facets(_read(args.file))
    rep = validate(n, facets)
    lines = [f"# seed: {args.seed}",
             f"closed_pseudomanifold {str(rep.is_closed_pseudomanifold).lower()}",
             f"connected {str(rep.is_connected).lower()}"]
    if rep.link_check_2d is not None:
        lines.append(f"links_are_cycles {str(rep.link_check_2d).lower()}")
    for face, cnt in rep.offending_faces:
        lines.append(f"NotPseudomanifold face {' '.join(str(v + 1) for v in face)} "
                     f"in {cnt} facets")
    for f in rep.duplicate_facets:
        lines.append(f"DuplicateFacet {' '.join(str(v + 1) for v in f)}")
    if not rep.is_connected:
        lines.append("Disconnected facet-adjacency graph")
    out.emit("\n".join(lines) + "\n", {
        "type": "validation",
        "closed_pseudomanifold": rep.is_closed_pseudomanifold,
        "connected": rep.is_connected,
        "links_are_cycles": rep.link_check_2d,
        "offending_faces": [{"face": [v + 1 for v in f], "count": c}
                            for f, c in rep.offending_faces],
        "duplicate_facets": [[v + 1 for v in f] for f in rep.duplicate_facets],
    })
    if not rep.ok:
        if rep.offending_faces:
            face, cnt = max(rep.offending_faces, key=lambda fc: fc[1])
            msg = (f"NotPseudomanifold: face {' '.join(str(v + 1) for v in face)} "
                   f"lies in {cnt} facets")
        elif rep.duplicate_facets:
            msg = "DuplicateFacet: " + " ".join(str(v + 1) for v in rep.duplicate_facets[0])
        else:
            msg = "Disconnected: facet-adjacency graph is disconnected"
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_invariants(args, out: _Out) -> int:
    T = _load_complex(args.file)
    info = {
        "type": "invariants",
        "dim": T.dimension,
        "f_vector": f_vector(T),
        "euler_characteristic": euler_characteristic(T),
        "orientable": is_orientable(T),
        "facet_two_colorable": facet_two_coloring(T) is not None,
    }
    if T.dimension == 2:
        info["even"] = is_even(T)
    info["automorphisms"] = (len(automorphisms(T)) if T.vertex_count <= AUTOMORPHISM_BOUND
                             else None)
    text = [f"# seed: {args.seed}"]
    for k, v in info.items():
        if k == "type":
            continue
        if isinstance(v, bool):
            v = str(v).lower()
        elif isinstance(v, list):
            v = " ".join(map(str, v))
        elif v is None:
            v = "skipped"
        text.append(f"{k} {v}")
    out.emit("\n".join(text) + "\n", info)
    return EXIT_OK


def cmd_two_color(args, out: _Out) -> int:
    T = _load_complex(args.file)
    c = facet_two_coloring(T)
    if c is None:
        return out.none("not facet 2-colorable")
    return _emit_coloring(out, args, T, c)


def cmd_grunbaum(args, out: _Out) -> int:
    T = _load_complex(args.file)
    m = args.method
    if m in ("lemma1", "tripartite") and T.dimension != 2:
        raise BadDimension(f"--method {m} needs a 2-dimensional complex")
    if m == "exact":
        g = exact_grunbaum(T, bound=args.bound)
        if g is None:
            return out.none("not Grunbaum colorable")
    elif m == "theorem1":
        c = (_load_coloring(args.coloring, FacetTwoColoring) if args.coloring
             else facet_two_coloring(T))
        if c is None:
            return out.none("not facet 2-colorable; matching construction does not apply")
        g = grunbaum_from_two_coloring(T, c)
    elif m == "lemma1":
        v = (_load_coloring(args.coloring, VertexColoring) if args.coloring
             else vertex_coloring_exact(T, 4))
        if v is None:
            return out.none("no surjective vertex 4-coloring")
        g = grunbaum_from_vertex4(T, v)
    else:
        v = (_load_coloring(args.coloring, VertexColoring) if args.coloring
             else vertex_coloring_exact(T, 3))
        if v is None:
            return out.none("no vertex 3-coloring; skeleton not tripartite")
        g = grunbaum_tripartite(T, vertex_classes(v))
    if not verify_grunbaum(T, g):
        raise GrunbaumError("internal error: produced coloring failed verification")
    return _emit_coloring(out, args, T, g)


def cmd_count(args, out: _Out) -> int:
    T = _load_complex(args.file)
    n = count_grunbaum_nonisomorphic(T)
    out.emit(f"# seed: {args.seed}\nnonisomorphic_grunbaum_colorings {n}\n",
             {"type": "count", "nonisomorphic_grunbaum_colorings": n})
    return EXIT_OK


def cmd_snark(args, out: _Out) -> int:
    obj = formats.parse_object(_read(args.file))
    source = "graph"
    if isinstance(obj, Triangulation):
        obj, _ = facet_adjacency(obj)
        source = "facet-adjacency graph"
    G: SimpleGraph = obj
    info = {
        "type": "snark",
        "source": source,
        "cubic": G.is_regular(3),
        "connected": is_connected(G),
        "bridgeless": not bridges(G),
        "snark": is_snark(G),
    }
    text = [f"# seed: {args.seed}"] + [
        f"{k} {str(v).lower()}" for k, v in info.items() if k not in ("type", "source")]
    out.emit("\n".join(text) + "\n", info)
    return EXIT_OK


def cmd_subdivide(args, out: _Out) -> int:
    T = barycentric_subdivision(_load_complex(args.file))
    c = facet_two_coloring(T)
    if c is not None:
        _write_side_coloring(args, c, T.dimension, T)
    body = {"complex": formats.complex_json(T)}
    if c is not None:
        body["coloring"] = formats.coloring_json(c, T.dimension, formats.file_labels(T))
    out.emit(formats.format_complex(T, args.seed), body)
    return EXIT_OK


def cmd_crown(args, out: _Out) -> int:
    T = _load_complex(args.file)
    c = _load_coloring(args.coloring, FacetTwoColoring) if args.coloring else facet_two_coloring(T)
    if c is None:
        return out.none("base is not facet 2-colorable")
    C, cc = bipyramidal_crown(T, c)
    return _complex_with_coloring(out, args, C, cc)


def _facet_arg(text: Optional[str]):
    if text is None:
        return None
    try:
        return tuple(sorted(int(t) - 1 for t in text.replace(",", " ").split()))
    except ValueError:
        raise ParseError(f"bad facet {text!r}") from None


def _map_arg(text: Optional[str]):
    if text is None:
        return None
    out = {}
    try:
        for pair in text.replace(" ", "").split(","):
            a, b = pair.split(":")
            out[int(a) - 1] = int(b) - 1
    except ValueError:
        raise ParseError(f"bad bijection {text!r}; expected 'a:b,c:d,...'") from None
    return out


def cmd_glue(args, out: _Out) -> int:
    T, R = _load_complex(args.first), _load_complex(args.second)
    cT = (_load_coloring(args.first_coloring, FacetTwoColoring) if args.first_coloring
          else facet_two_coloring(T))
    cR = (_load_coloring(args.second_coloring, FacetTwoColoring) if args.second_coloring
          else facet_two_coloring(R))
    if cT is None or cR is None:
        return out.none("operand is not facet 2-colorable")
    G, cG = glue(T, cT, R, cR, _facet_arg(args.black_facet), _facet_arg(args.white_facet),
                 _map_arg(args.map))
    return _complex_with_coloring(out, args, G, cG)


def cmd_cross_polytope(args, out: _Out) -> int:
    T, c = cross_polytope(args.n)
    return _complex_with_coloring(out, args, T, c)


def cmd_quadrangulate(args, out: _Out) -> int:
    T = _load_complex(args.file)
    if args.coloring:
        g = _load_coloring(args.coloring, GrunbaumColoring)
    else:
        c = facet_two_coloring(T)
        g = grunbaum_from_two_coloring(T, c) if c is not None else exact_grunbaum(T)
        if g is None:
            return out.none("not Grunbaum colorable")
    Q = quadrangulate(T, g, args.drop)
    lab = formats.file_labels(T)
    quads = [[lab[v] for v in q] for q in Q.faces]
    text = [f"# seed: {args.seed}",
            f"quadrangulation vertices {len(Q.vertices)} edges {len(Q.edges)} "
            f"faces {len(Q.faces)} euler {Q.euler_characteristic()}"]
    text += [" ".join(map(str, q)) for q in quads]
    out.emit("\n".join(text) + "\n", {
        "type": "quadrangulation", "vertices": len(Q.vertices),
        "edges": [[lab[a], lab[b]] for a, b in Q.edges], "faces": quads,
        "euler_characteristic": Q.euler_characteristic()})
    return EXIT_OK


def cmd_catalog(args, out: _Out) -> int:
    obj = catalog(args.name)
    if isinstance(obj, SimpleGraph):
        out.emit(formats.format_graph(obj, args.seed), formats.graph_json(obj))
    else:
        out.emit(formats.format_complex(obj, args.seed), formats.complex_json(obj))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="recorded in output headers (all commands are deterministic)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("-o", "--output", default="-", help="output path ('-' = stdout)")

    p = argparse.ArgumentParser(prog="grunbaum", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version",
                   version=f"%(prog)s 0.1.0 (kernel: {kernel.IMPLEMENTATION})")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "structural check of a complex file").add_argument("file")
    add("invariants", cmd_invariants, "f-vector, Euler characteristic, orientability, ...")\
        .add_argument("file")
    add("two-color", cmd_two_color, "facet 2-coloring").add_argument("file")

    sp = add("grunbaum", cmd_grunbaum, "Grunbaum (hyper-)coloring")
    sp.add_argument("file")
    sp.add_argument("--method", choices=("exact", "theorem1", "lemma1", "tripartite"),
                    default="exact")
    sp.add_argument("--coloring", help="input coloring (facet2 for theorem1, vertex otherwise)")
    sp.add_argument("--bound", type=int, default=60, help="ridge limit for --method exact")

    add("count-colorings", cmd_count, "Grunbaum colorings up to isomorphism")\
        .add_argument("file")
    add("snark", cmd_snark, "snark test for a graph (or a complex's dual graph)")\
        .add_argument("file")

    sp = add("subdivide", cmd_subdivide, "first barycentric subdivision")
    sp.add_argument("file")
    sp.add_argument("--coloring-out", help="also write the facet 2-coloring here")

    sp = add("crown", cmd_crown, "bipyramidal crown of a facet 2-colored complex")
    sp.add_argument("file")
    sp.add_argument("--coloring", help="facet2 coloring of the input")
    sp.add_argument("--coloring-out", help="write the output's facet 2-coloring here")

    sp = add("glue", cmd_glue, "connected sum along a black and a white facet")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--first-coloring")
    sp.add_argument("--second-coloring")
    sp.add_argument("--black-facet", help="facet of FIRST, e.g. '1 2 3'")
    sp.add_argument("--white-facet", help="facet of SECOND")
    sp.add_argument("--map", help="vertex bijection FIRST->SECOND, e.g. '1:4,2:5,3:6'")
    sp.add_argument("--coloring-out")

    sp = add("cross-polytope", cmd_cross_polytope, "boundary of the (n+1)-cross-polytope")
    sp.add_argument("n", type=int)
    sp.add_argument("--coloring-out")

    sp = add("quadrangulate", cmd_quadrangulate, "drop one color class of edges (n = 2)")
    sp.add_argument("file")
    sp.add_argument("--drop", type=int, default=0)
    sp.add_argument("--coloring", help="grunbaum coloring (default: theorem1, else exact)")

    add("catalog", cmd_catalog, "print a named complex or graph").add_argument("name")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, _Out(args))
    except GrunbaumError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
