"""Text file formats (1-based vertex ids on disk, 0-based in memory).

Complex file::

    # comment
    dim 2 vertices 6
    1 2 3
    ...

Graph file::

    graph vertices 10
    1 2
    ...

Coloring file::

    kind grunbaum
    dim 2
    1 2: 0
    ...

``kind`` is one of ``facet2`` (colors ``black``/``white``), ``grunbaum``,
``vertex`` (items are single vertices) or ``edge`` (graph edges).
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .coloring import BLACK, WHITE, FacetTwoColoring, GrunbaumColoring, VertexColoring
from .complex import Triangulation, build_triangulation
from .errors import GrunbaumError, ParseError
from .graph import EdgeColoring, SimpleGraph

KINDS = ("facet2", "grunbaum", "vertex", "edge")
_FACET_WORDS = {"black": BLACK, "white": WHITE}


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _ints(tokens: Iterable[str], no: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


# -- complexes and graphs ----------------------------------------------------

def parse_object(text: str) -> Union[Triangulation, SimpleGraph]:
    """Parse a complex or graph file (text or JSON rendering)."""
    if text.lstrip().startswith("{"):
        return _from_json(text)
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input")
    no, head = lines[0]
    tok = head.split()
    if len(tok) == 4 and tok[0] == "dim" and tok[2] == "vertices":
        n, nv = _ints((tok[1], tok[3]), no)
        return _complex_body(n, nv, lines[1:])
    if len(tok) == 3 and tok[0] == "graph" and tok[1] == "vertices":
        (nv,) = _ints(tok[2:], no)
        return _graph_body(nv, lines[1:])
    raise ParseError("expected header 'dim <n> vertices <V>' or 'graph vertices <V>'", no)


def parse_complex(text: str) -> Triangulation:
    obj = parse_object(text)
    if not isinstance(obj, Triangulation):
        raise ParseError("expected a complex file, got a graph")
    return obj


def read_facets(text: str) -> Tuple[int, List[List[int]]]:
    """Header dimension and 0-based facet lists, without pseudomanifold checks."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input")
    no, head = lines[0]
    tok = head.split()
    if not (len(tok) == 4 and tok[0] == "dim" and tok[2] == "vertices"):
        raise ParseError("expected header 'dim <n> vertices <V>'", no)
    n, nv = _ints((tok[1], tok[3]), no)
    return n, _facet_lines(n, nv, lines[1:])


def _facet_lines(n: int, nv: int, lines) -> List[List[int]]:
    facets = []
    for no, line in lines:
        vs = _ints(line.split(), no)
        if len(vs) != n + 1:
            raise ParseError(f"facet has {len(vs)} vertices, expected {n + 1}", no)
        if any(not 1 <= v <= nv for v in vs):
            raise ParseError(f"vertex id outside 1..{nv}", no)
        if len(set(vs)) != len(vs):
            raise ParseError("repeated vertex in facet", no)
        facets.append([v - 1 for v in vs])
    return facets


def _complex_body(n: int, nv: int, lines) -> Triangulation:
    T = build_triangulation(n, _facet_lines(n, nv, lines))
    if T.vertex_count != nv:
        raise ParseError(f"header declares {nv} vertices but facets use {T.vertex_count}")
    return T


def _graph_body(nv: int, lines) -> SimpleGraph:
    edges = []
    for no, line in lines:
        e = _ints(line.split(), no)
        if len(e) != 2 or not all(1 <= v <= nv for v in e):
            raise ParseError(f"expected an edge 'u v' with ids in 1..{nv}", no)
        edges.append((e[0] - 1, e[1] - 1))
    return SimpleGraph.from_edges(nv, edges)


def file_labels(T: Triangulation) -> Dict[int, int]:
    return {v: i + 1 for i, v in enumerate(T.vertices)}


def format_complex(T: Triangulation, seed: Optional[int] = None) -> str:
    lab = file_labels(T)
    out = [] if seed is None else [f"# seed: {seed}"]
    out.append(f"dim {T.dimension} vertices {T.vertex_count}")
    out += [" ".join(str(lab[v]) for v in f) for f in T.facets]
    return "\n".join(out) + "\n"


def format_graph(G: SimpleGraph, seed: Optional[int] = None) -> str:
    out = [] if seed is None else [f"# seed: {seed}"]
    out.append(f"graph vertices {G.vertex_count}")
    out += [f"{u + 1} {v + 1}" for u, v in G.edges]
    return "\n".join(out) + "\n"


def complex_json(T: Triangulation) -> dict:
    lab = file_labels(T)
    return {"type": "complex", "dim": T.dimension, "vertices": T.vertex_count,
            "facets": [[lab[v] for v in f] for f in T.facets]}


def graph_json(G: SimpleGraph) -> dict:
    return {"type": "graph", "vertices": G.vertex_count,
            "edges": [[u + 1, v + 1] for u, v in G.edges]}


def _from_json(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if "complex" in obj and isinstance(obj["complex"], dict):
        obj = obj["complex"]
    kind = obj.get("type")
    try:
        if kind == "complex":
            T = build_triangulation(obj["dim"], ([v - 1 for v in f] for f in obj["facets"]))
            if T.vertex_count != obj["vertices"]:
                raise ParseError("vertex count does not match facets")
            return T
        if kind == "graph":
            return SimpleGraph.from_edges(obj["vertices"],
                                          ((u - 1, v - 1) for u, v in obj["edges"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed JSON object: {exc}") from None
    raise ParseError(f"unsupported JSON object type {kind!r}")


# -- colorings ---------------------------------------------------------------

Coloring = Union[FacetTwoColoring, GrunbaumColoring, VertexColoring, EdgeColoring]


def coloring_kind(c: Coloring) -> str:
    return {FacetTwoColoring: "facet2", GrunbaumColoring: "grunbaum",
            VertexColoring: "vertex", EdgeColoring: "edge"}[type(c)]


def _entries(c: Coloring, lab: Dict[int, int]):
    if isinstance(c, VertexColoring):
        return [((lab[v],), col) for v, col in sorted(c.color.items())]
    items = sorted(c.color.items())
    return [(tuple(lab[v] for v in f), col) for f, col in items]


def _color_word(kind: str, col: int) -> str:
    if kind == "facet2":
        return "black" if col == BLACK else "white"
    return str(col)


def format_coloring(c: Coloring, dim: int, labels: Optional[Dict[int, int]] = None,
                    seed: Optional[int] = None) -> str:
    """Render a coloring; ``labels`` maps internal ids to file ids (default v+1)."""
    kind = coloring_kind(c)
    lab = labels if labels is not None else _PlusOne()
    out = [] if seed is None else [f"# seed: {seed}"]
    out += [f"kind {kind}", f"dim {dim}"]
    if isinstance(c, (VertexColoring, EdgeColoring)):
        out.append(f"colors {c.k}")
    out += [f"{' '.join(map(str, item))}: {_color_word(kind, col)}"
            for item, col in _entries(c, lab)]
    return "\n".join(out) + "\n"


def coloring_json(c: Coloring, dim: int, labels: Optional[Dict[int, int]] = None) -> dict:
    kind = coloring_kind(c)
    lab = labels if labels is not None else _PlusOne()
    obj = {"type": "coloring", "kind": kind, "dim": dim}
    if isinstance(c, (VertexColoring, EdgeColoring)):
        obj["colors"] = c.k
    obj["entries"] = [{"item": list(item), "color": _color_word(kind, col)}
                      for item, col in _entries(c, lab)]
    return obj


class _PlusOne(dict):
    def __missing__(self, key):
        return key + 1


def parse_coloring(text: str, labels: Optional[Dict[int, int]] = None) -> Tuple[Coloring, int]:
    """Inverse of :func:`format_coloring`; returns ``(coloring, dim)``.

    ``labels`` maps file ids back to internal ids (default v-1).
    """
    if text.lstrip().startswith("{"):
        return _coloring_from_json(text, labels)
    kind = dim = k = None
    entries = []
    for no, line in _content_lines(text):
        if ":" not in line:
            tok = line.split()
            if len(tok) != 2:
                raise ParseError(f"unexpected line {line!r}", no)
            key, val = tok
            if key == "kind":
                if val not in KINDS:
                    raise ParseError(f"unknown kind {val!r}", no)
                kind = val
            elif key in ("dim", "colors"):
                (num,) = _ints([val], no)
                if key == "dim":
                    dim = num
                else:
                    k = num
            else:
                raise ParseError(f"unknown key {key!r}", no)
            continue
        item, _, col = line.partition(":")
        entries.append((no, _ints(item.split(), no), col.strip()))
    if kind is None or dim is None:
        raise ParseError("missing 'kind' or 'dim' record")
    return _build_coloring(kind, dim, k, entries, labels), dim


def _coloring_from_json(text: str, labels):
    try:
        obj = json.loads(text)
        if "coloring" in obj and isinstance(obj["coloring"], dict):
            obj = obj["coloring"]
        kind, dim = obj["kind"], obj["dim"]
        entries = [(None, list(e["item"]), str(e["color"])) for e in obj["entries"]]
        k = obj.get("colors")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed JSON coloring: {exc}") from None
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    return _build_coloring(kind, dim, k, entries, labels), dim


def _build_coloring(kind, dim, k, entries, labels) -> Coloring:
    def internal(v):
        if labels is None:
            return v - 1
        if v not in labels:
            raise ParseError(f"unknown vertex id {v}")
        return labels[v]

    color = {}
    for no, item, word in entries:
        if kind == "facet2":
            if word not in _FACET_WORDS and word not in ("0", "1"):
                raise ParseError(f"facet color must be black/white, got {word!r}", no)
            col = _FACET_WORDS[word] if word in _FACET_WORDS else int(word)
        else:
            (col,) = _ints([word], no)
        key = tuple(sorted(internal(v) for v in item))
        if kind == "vertex":
            if len(key) != 1:
                raise ParseError("vertex entries take exactly one id", no)
            key = key[0]
        if key in color:
            raise ParseError(f"duplicate entry {item}", no)
        color[key] = col
    if kind == "facet2":
        return FacetTwoColoring(color)
    if kind == "grunbaum":
        return GrunbaumColoring(color)
    if k is None:
        k = max(color.values(), default=-1) + 1
    if kind == "vertex":
        return VertexColoring(color, k)
    return EdgeColoring(color, k)


def dump_json(obj) -> str:
    try:
        return json.dumps(obj, indent=2, sort_keys=False) + "\n"
    except TypeError as exc:
        raise GrunbaumError(f"cannot serialize output: {exc}") from None
