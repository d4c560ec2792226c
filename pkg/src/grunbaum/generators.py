"""Constructions of new triangulations and a catalog of named objects."""

from __future__ import annotations

import re
from collections import deque
from itertools import combinations, permutations, product
from typing import Dict, List, Optional, Tuple, Union

from .coloring import BLACK, WHITE, FacetTwoColoring, is_valid_two_coloring
from .complex import Simplex, Triangulation, build_triangulation, faces, skeleton_adjacency
from .errors import BadArity, BadBijection, InvalidTwoColoring, UnknownName, WrongColor
from .graph import SimpleGraph


def barycentric_subdivision(T: Triangulation) -> Triangulation:
    """First barycentric subdivision.

    New vertex ids are the ranks of the original faces (all dimensions) in
    lexicographic order of their vertex tuples.  Facets are full flags.
    """
    n = T.dimension
    all_faces = sorted(f for k in range(n + 1) for f in faces(T, k))
    vid = {f: i for i, f in enumerate(all_faces)}
    out = []
    for f in T.facets:
        for perm in permutations(f):
            out.append([vid[tuple(sorted(perm[:j + 1]))] for j in range(n + 1)])
    return build_triangulation(n, out)


def bipyramidal_crown(T: Triangulation, c: FacetTwoColoring
                      ) -> Tuple[Triangulation, FacetTwoColoring]:
    """Double cone with apexes N and S; N*f keeps f's color, S*f flips it."""
    if not is_valid_two_coloring(T, c):
        raise InvalidTwoColoring("not a valid facet 2-coloring of T")
    north = T.vertices[-1] + 1
    south = north + 1
    color: Dict[Simplex, int] = {}
    for f in T.facets:
        color[f + (north,)] = c.color[f]
        color[f + (south,)] = 1 - c.color[f]
    out = build_triangulation(T.dimension + 1, color)
    return out, FacetTwoColoring({f: color[f] for f in out.facets})


def glue(T: Triangulation, cT: FacetTwoColoring, R: Triangulation, cR: FacetTwoColoring,
         black_facet: Optional[Simplex] = None, white_facet: Optional[Simplex] = None,
         bijection: Optional[Dict[int, int]] = None) -> Tuple[Triangulation, FacetTwoColoring]:
    """Connected sum along a black facet of T and a white facet of R.

    ``bijection`` maps the vertices of ``black_facet`` to those of
    ``white_facet`` (default: pair them in sorted order).  Defaults for the
    facets are the first black facet of T and the first white facet of R.
    R's remaining vertices are renumbered after T's largest id.
    """
    if T.dimension != R.dimension:
        raise BadArity("glue needs equal dimensions")
    for X, cX in ((T, cT), (R, cR)):
        if not is_valid_two_coloring(X, cX):
            raise InvalidTwoColoring("invalid facet 2-coloring of an operand")
    if black_facet is None:
        black_facet = cT.facets_of(BLACK)[0]
    if white_facet is None:
        white_facet = cR.facets_of(WHITE)[0]
    black_facet, white_facet = tuple(sorted(black_facet)), tuple(sorted(white_facet))
    if black_facet not in cT.color or white_facet not in cR.color:
        raise BadArity("chosen facet does not belong to its complex")
    if cT.color[black_facet] != BLACK:
        raise WrongColor(f"{black_facet} is not black in T")
    if cR.color[white_facet] != WHITE:
        raise WrongColor(f"{white_facet} is not white in R")
    if bijection is None:
        bijection = dict(zip(black_facet, white_facet))
    if (sorted(bijection) != list(black_facet)
            or sorted(bijection.values()) != list(white_facet)):
        raise BadBijection("bijection must map the black facet onto the white facet")

    relabel = {w: t for t, w in bijection.items()}
    nxt = T.vertices[-1] + 1
    for v in R.vertices:
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    color: Dict[Simplex, int] = {f: cT.color[f] for f in T.facets if f != black_facet}
    for f in R.facets:
        if f == white_facet:
            continue
        g = tuple(sorted(relabel[v] for v in f))
        if g in color:
            raise BadBijection(f"identification creates duplicate facet {g}")
        color[g] = cR.color[f]
    out = build_triangulation(T.dimension, color)
    oc = FacetTwoColoring({f: color[f] for f in out.facets})
    if not is_valid_two_coloring(out, oc):
        raise InvalidTwoColoring("glued coloring is not proper")
    return out, oc


def cross_polytope(n: int) -> Tuple[Triangulation, FacetTwoColoring]:
    """Boundary of the (n+1)-cross-polytope, colored by parity of minus signs.

    Vertex ``2i`` is +e_i and ``2i+1`` is -e_i.
    """
    if n < 1:
        raise BadArity("n must be >= 1")
    color = {}
    for signs in product((0, 1), repeat=n + 1):
        color[tuple(2 * i + s for i, s in enumerate(signs))] = sum(signs) % 2
    T = build_triangulation(n, color)
    return T, FacetTwoColoring({f: color[f] for f in T.facets})


# -- catalog -----------------------------------------------------------------

def cycle(m: int) -> Triangulation:
    if m < 3:
        raise BadArity("a cycle needs at least 3 vertices")
    return build_triangulation(1, ([i, (i + 1) % m] for i in range(m)))


def simplex_boundary(n: int) -> Triangulation:
    """Boundary of the (n+1)-simplex on vertices 0..n+1."""
    return build_triangulation(n, combinations(range(n + 2), n + 1))


def octahedron() -> Triangulation:
    # antipodal pairs (0,3), (1,4), (2,5)
    return build_triangulation(2, product((0, 3), (1, 4), (2, 5)))


def icosahedron() -> Triangulation:
    top, bottom = 0, 11
    up = [1 + i for i in range(5)]
    low = [6 + i for i in range(5)]
    fs = []
    for i in range(5):
        j = (i + 1) % 5
        fs += [(top, up[i], up[j]), (up[i], up[j], low[i]),
               (up[j], low[i], low[j]), (bottom, low[i], low[j])]
    return build_triangulation(2, fs)


def k6_projective_plane() -> Triangulation:
    """Antipodal quotient of the icosahedron (antipode = graph distance 3)."""
    ico = icosahedron()
    adj = skeleton_adjacency(ico)
    antipode = {}
    for v in ico.vertices:
        dist = {v: 0}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        (far,) = [w for w, d in dist.items() if d == 3]
        antipode[v] = far
    reps = sorted({min(v, antipode[v]) for v in ico.vertices})
    cls = {v: reps.index(min(v, antipode[v])) for v in ico.vertices}
    quotient = {tuple(sorted(cls[v] for v in f)) for f in ico.facets}
    return build_triangulation(2, quotient, check_links=True)


def k7_moebius_torus() -> Triangulation:
    """Seven-vertex torus with facets {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    fs = []
    for i in range(7):
        fs.append((i, (i + 1) % 7, (i + 3) % 7))
        fs.append((i, (i + 2) % 7, (i + 3) % 7))
    return build_triangulation(2, fs, check_links=True)


def triangular_torus_3x3() -> Triangulation:
    """3x3 grid on the torus, each square split along the same diagonal.

    Vertex ``3*i + j``; the classes ``(i - j) mod 3`` form a tripartition.
    """
    def v(i, j):
        return 3 * (i % 3) + j % 3

    fs = []
    for i in range(3):
        for j in range(3):
            fs.append((v(i, j), v(i + 1, j), v(i, j + 1)))
            fs.append((v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)))
    return build_triangulation(2, fs, check_links=True)


def triangular_torus_parts() -> List[List[int]]:
    return [[3 * i + j for i in range(3) for j in range(3) if (i - j) % 3 == c]
            for c in range(3)]


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner)


def cube_graph() -> SimpleGraph:
    return SimpleGraph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3)
                                      if u < u ^ (1 << b)])


def heawood() -> SimpleGraph:
    """LCF notation [5, -5]^7."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    for i in range(14):
        j = (i + (5 if i % 2 == 0 else -5)) % 14
        if i < j:
            edges.append((i, j))
    return SimpleGraph.from_edges(14, edges)


_FIXED = {
    "tetrahedron": lambda: simplex_boundary(2),
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "k6_projective_plane": k6_projective_plane,
    "k7_moebius_torus": k7_moebius_torus,
    "triangular_torus_3x3": triangular_torus_3x3,
    "petersen": petersen,
    "cube_graph": cube_graph,
    "heawood": heawood,
}
_PARAM = {"cycle": cycle, "simplex_boundary": simplex_boundary}

CATALOG_NAMES = tuple(_FIXED) + ("cycle(m)", "simplex_boundary(n)")


def catalog(name: str) -> Union[Triangulation, SimpleGraph]:
    """Named complex or graph; parametrized names look like ``cycle(6)``."""
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"(\w+)\((\d+)\)", name)
    if m and m.group(1) in _PARAM:
        return _PARAM[m.group(1)](int(m.group(2)))
    raise UnknownName(f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}")
