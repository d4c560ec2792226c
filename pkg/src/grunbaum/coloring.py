"""Facet 2-colorings, Grünbaum hyper-colorings and their constructions.

Conventions:

* facet colors are ``BLACK = 0`` and ``WHITE = 1``;
* Grünbaum colors are ``0..n``, assigned to (n-1)-faces ("ridges");
* canonical Grünbaum output numbers colors by first occurrence over the
  ridges in lexicographic order, so the first ridge always gets color 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernel
from .complex import (
    Simplex,
    Triangulation,
    automorphisms,
    boundary,
    faces,
)
from .errors import (
    BadArity,
    BadDimension,
    InvalidColoring,
    InvalidPalette,
    InvalidTwoColoring,
    MissingFace,
    NotDistinct,
    NotFourColoring,
    NotTripartite,
    TooLarge,
    TriangleInequalityViolated,
)
from .graph import (
    NotBipartite,
    bipartition,
    canonical_colors,
    facet_adjacency,
    regular_bipartite_edge_coloring,
)

BLACK, WHITE = 0, 1

EXACT_GRUNBAUM_BOUND = 60
COUNT_BOUND = 20


@dataclass(frozen=True)
class FacetTwoColoring:
    color: Dict[Simplex, int]

    def facets_of(self, c: int) -> List[Simplex]:
        return sorted(f for f, x in self.color.items() if x == c)


@dataclass(frozen=True)
class GrunbaumColoring:
    color: Dict[Simplex, int]

    def permuted(self, perm: Sequence[int]) -> "GrunbaumColoring":
        return GrunbaumColoring({f: perm[c] for f, c in self.color.items()})


@dataclass(frozen=True)
class VertexColoring:
    color: Dict[int, int]
    k: int


@dataclass(frozen=True)
class Quadrangulation:
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    faces: Tuple[Tuple[int, int, int, int], ...]

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def is_valid(self) -> bool:
        """Each face is a 4-cycle on existing edges; each edge lies on two faces."""
        edges = set(self.edges)
        uses = dict.fromkeys(edges, 0)
        for q in self.faces:
            if len(set(q)) != 4:
                return False
            for i in range(4):
                a, b = q[i], q[(i + 1) % 4]
                e = (min(a, b), max(a, b))
                if e not in edges:
                    return False
                uses[e] += 1
        return all(c == 2 for c in uses.values())


@dataclass(frozen=True)
class MergedCells:
    """Result of deleting one color class of ridges when n >= 3."""

    dropped: int
    cells: Tuple[Tuple[Simplex, Simplex, Simplex], ...]  # (facet, facet, removed ridge)

    @property
    def count(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class ScaleneLabeling:
    value: Dict[Simplex, float]
    palette: Tuple[float, ...]
    coherence_checked: bool


# -- facet 2-coloring --------------------------------------------------------

def facet_two_coloring(T: Triangulation) -> Optional[FacetTwoColoring]:
    """Black/white facet coloring from a bipartition of the facet-adjacency graph.

    The first facet (lexicographically) is black.  None if no 2-coloring exists.
    """
    G, _ = facet_adjacency(T)
    B = bipartition(G)
    if isinstance(B, NotBipartite):
        return None
    return FacetTwoColoring({f: B.side[i] for i, f in enumerate(T.facets)})


def is_valid_two_coloring(T: Triangulation, c: FacetTwoColoring) -> bool:
    if set(c.color) != set(T.facets):
        return False
    if any(x not in (BLACK, WHITE) for x in c.color.values()):
        return False
    fs = T.facets
    return all(c.color[fs[a]] != c.color[fs[b]] for a, b in T.ridges.values())


def _canonical(T: Triangulation, colors: Dict[Simplex, int]) -> GrunbaumColoring:
    ridges = faces(T, T.dimension - 1)
    return GrunbaumColoring(dict(zip(ridges, canonical_colors([colors[r] for r in ridges]))))


def grunbaum_from_two_coloring(T: Triangulation, c: FacetTwoColoring) -> GrunbaumColoring:
    """Edge-color the (n+1)-regular bipartite facet graph and move colors to ridges."""
    if not is_valid_two_coloring(T, c):
        raise InvalidTwoColoring("not a valid facet 2-coloring of T")
    G, edge_face = facet_adjacency(T)
    ec = regular_bipartite_edge_coloring(G, T.dimension + 1)
    return _canonical(T, {edge_face[e]: col for e, col in ec.color.items()})


def verify_grunbaum(T: Triangulation, g: GrunbaumColoring) -> bool:
    """True iff every facet shows all n+1 colors on its boundary."""
    n = T.dimension
    missing = [r for r in faces(T, n - 1) if r not in g.color]
    if missing:
        raise MissingFace(f"{len(missing)} ridge(s) uncolored, e.g. {missing[0]}")
    want = set(range(n + 1))
    return all({g.color[r] for r in boundary(f)} == want for f in T.facets)


# -- vertex colorings and the explicit constructions -------------------------

def vertex_coloring_exact(T: Triangulation, k: int) -> Optional[VertexColoring]:
    """Proper coloring of the 1-skeleton using every one of k colors, or None."""
    if k < 1:
        raise ValueError("k must be >= 1")
    verts = T.vertices
    idx = {v: i for i, v in enumerate(verts)}
    groups = [[idx[a], idx[b]] for a, b in faces(T, 1)]
    sol = kernel.solve(len(verts), k, groups, require_all=True)
    if sol is None:
        return None
    return VertexColoring(dict(zip(verts, canonical_colors(sol))), k)


def is_proper_vertex_coloring(T: Triangulation, v: VertexColoring) -> bool:
    if set(v.color) != set(T.vertices):
        return False
    if set(v.color.values()) != set(range(v.k)):
        return False
    return all(v.color[a] != v.color[b] for a, b in faces(T, 1))


# red = 0, blue = 1, green = 2
_PAIR_COLOR = {
    frozenset((0, 1)): 0, frozenset((2, 3)): 0,
    frozenset((0, 2)): 1, frozenset((1, 3)): 1,
    frozenset((0, 3)): 2, frozenset((1, 2)): 2,
}


def grunbaum_from_vertex4(T: Triangulation, v: VertexColoring) -> GrunbaumColoring:
    """Edge color from the pair of vertex classes at its ends (classes 0..3)."""
    if T.dimension != 2:
        raise BadDimension("the four-class construction needs n = 2")
    if v.k != 4 or not is_proper_vertex_coloring(T, v):
        raise NotFourColoring("need a proper surjective vertex 4-coloring")
    return GrunbaumColoring({(a, b): _PAIR_COLOR[frozenset((v.color[a], v.color[b]))]
                             for a, b in faces(T, 1)})


def grunbaum_tripartite(T: Triangulation, parts: Sequence[Iterable[int]]) -> GrunbaumColoring:
    """AB edges red (0), BC blue (1), AC green (2) for vertex classes A, B, C."""
    if T.dimension != 2:
        raise BadDimension("the tripartite rule needs n = 2")
    parts = [set(p) for p in parts]
    if len(parts) != 3:
        raise NotTripartite(f"need 3 classes, got {len(parts)}")
    cls: Dict[int, int] = {}
    for i, p in enumerate(parts):
        for x in p:
            if x in cls:
                raise NotTripartite(f"vertex {x} in two classes")
            cls[x] = i
    if set(cls) != set(T.vertices):
        raise NotTripartite("classes do not cover exactly the vertex set")
    rule = {frozenset((0, 1)): 0, frozenset((1, 2)): 1, frozenset((0, 2)): 2}
    out = {}
    for a, b in faces(T, 1):
        if cls[a] == cls[b]:
            raise NotTripartite(f"edge ({a}, {b}) inside class {cls[a]}")
        out[(a, b)] = rule[frozenset((cls[a], cls[b]))]
    return GrunbaumColoring(out)


# -- exact search ------------------------------------------------------------

def _ridge_problem(T: Triangulation):
    ridges = faces(T, T.dimension - 1)
    idx = {r: i for i, r in enumerate(ridges)}
    groups = [[idx[r] for r in boundary(f)] for f in T.facets]
    return ridges, idx, groups


def exact_grunbaum(T: Triangulation, bound: int = EXACT_GRUNBAUM_BOUND) -> Optional[GrunbaumColoring]:
    """Decide Grünbaum hyper-colorability by exhaustive search."""
    ridges, _, groups = _ridge_problem(T)
    if len(ridges) > bound:
        raise TooLarge(f"{len(ridges)} ridges exceeds bound {bound}")
    sol = kernel.solve(len(ridges), T.dimension + 1, groups)
    if sol is None:
        return None
    return _canonical(T, dict(zip(ridges, sol)))


def enumerate_grunbaum(T: Triangulation, bound: int = COUNT_BOUND) -> List[Tuple[int, ...]]:
    """Every valid coloring, as color tuples aligned with ``faces(T, n-1)``."""
    ridges, _, groups = _ridge_problem(T)
    if len(ridges) > bound:
        raise TooLarge(f"{len(ridges)} ridges exceeds bound {bound}")
    return kernel.enumerate_all(len(ridges), T.dimension + 1, groups)


def count_grunbaum_nonisomorphic(T: Triangulation, bound: int = COUNT_BOUND) -> int:
    """Orbits of Grünbaum colorings under automorphisms x color permutations.

    The orbit representative is the lexicographic minimum over all
    automorphism images, each relabeled by first occurrence (which is the
    minimum over color permutations).
    """
    ridges, idx, _ = _ridge_problem(T)
    sols = enumerate_grunbaum(T, bound)
    # perm_idx[p][i]: index of the image of ridge i under automorphism p
    perm_idx = [[idx[tuple(sorted(p[v] for v in r))] for r in ridges]
                for p in automorphisms(T)]
    m = len(ridges)
    reps = set()
    for col in sols:
        best = None
        for pi in perm_idx:
            img = [0] * m
            for i, j in enumerate(pi):
                img[j] = col[i]
            cand = tuple(canonical_colors(img))
            if best is None or cand < best:
                best = cand
        reps.add(best)
    return len(reps)


# -- applications ------------------------------------------------------------

def _check_drop(T: Triangulation, g: GrunbaumColoring, drop: int) -> None:
    if not verify_grunbaum(T, g):
        raise InvalidColoring("not a valid Grünbaum coloring")
    if not 0 <= drop <= T.dimension:
        raise InvalidColoring(f"color {drop} outside 0..{T.dimension}")


def _quad(a: int, c: int, b: int, d: int) -> Tuple[int, int, int, int]:
    cyc = [a, c, b, d]
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if cyc[3] < cyc[1]:
        cyc = [cyc[0], cyc[3], cyc[2], cyc[1]]
    return tuple(cyc)


def quadrangulate(T: Triangulation, g: GrunbaumColoring, drop: int) -> Quadrangulation:
    """Delete the edges of one color; each merges its two triangles into a quad.

    All original vertices are kept.
    """
    if T.dimension != 2:
        raise BadDimension("quadrangulation needs n = 2")
    _check_drop(T, g, drop)
    quads = []
    for (a, b), (i, j) in T.ridges.items():
        if g.color[(a, b)] != drop:
            continue
        c = next(x for x in T.facets[i] if x not in (a, b))
        d = next(x for x in T.facets[j] if x not in (a, b))
        quads.append(_quad(a, c, b, d))
    kept = tuple(e for e in faces(T, 1) if g.color[e] != drop)
    return Quadrangulation(T.vertices, kept, tuple(sorted(quads)))


def remove_color_class(T: Triangulation, g: GrunbaumColoring, drop: int) -> MergedCells:
    """Pair up facets across the removed ridges of one color (n >= 3)."""
    if T.dimension < 3:
        raise BadDimension("color-class removal report needs n >= 3")
    _check_drop(T, g, drop)
    cells = tuple((T.facets[i], T.facets[j], r) for r, (i, j) in T.ridges.items()
                  if g.color[r] == drop)
    return MergedCells(drop, cells)


def scalene_labeling(T: Triangulation, g: GrunbaumColoring,
                     palette: Sequence[float]) -> ScaleneLabeling:
    """Replace color c by ``palette[c]``.

    For n = 2 the palette must satisfy the strict triangle inequality; for
    other n only positivity and distinctness are checked.
    """
    n = T.dimension
    pal = tuple(float(x) for x in palette)
    if len(pal) != n + 1:
        raise BadArity(f"palette needs {n + 1} values, got {len(pal)}")
    if any(x <= 0 for x in pal):
        raise InvalidPalette("palette values must be positive")
    if len(set(pal)) != len(pal):
        raise NotDistinct(f"palette {pal} has repeated values")
    if not verify_grunbaum(T, g):
        raise InvalidColoring("not a valid Grünbaum coloring")
    if n == 2:
        for a, b, c in combinations(sorted(pal), 3):
            if a + b <= c:
                raise TriangleInequalityViolated(f"{a} + {b} <= {c}")
    return ScaleneLabeling({r: pal[c] for r, c in g.color.items()}, pal, n == 2)


def vertex_classes(v: VertexColoring) -> List[List[int]]:
    """Vertex classes of a coloring, in color order."""
    parts: List[List[int]] = [[] for _ in range(v.k)]
    for x in sorted(v.color):
        parts[v.color[x]].append(x)
    return parts


def split_class(v: VertexColoring) -> VertexColoring:
    """Move one vertex of the largest class into a new color (k -> k+1).

    A singleton class next to a proper coloring stays proper.
    """
    parts = vertex_classes(v)
    big = max(range(v.k), key=lambda i: (len(parts[i]), -i))
    if len(parts[big]) < 2:
        raise NotFourColoring("no class has two vertices to split")
    out = dict(v.color)
    out[parts[big][-1]] = v.k
    return VertexColoring(out, v.k + 1)

