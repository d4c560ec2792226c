"""Simplicial complexes: closed pseudomanifold triangulations of dimension n.

A facet is stored as a canonical simplex, i.e. a strictly increasing tuple
of non-negative vertex ids.  All lookups are keyed on that form.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    BadArity,
    BadDimension,
    Disconnected,
    DuplicateFacet,
    NotPseudomanifold,
    TooLarge,
)

Simplex = Tuple[int, ...]

AUTOMORPHISM_BOUND = 16


def simplex(vertices: Iterable[int]) -> Simplex:
    """Return the canonical (sorted) form of a simplex.

    Raises BadArity for repeated or negative vertex ids.
    """
    vs = tuple(sorted(int(v) for v in vertices))
    if not vs:
        raise BadArity("a simplex needs at least one vertex")
    if vs[0] < 0:
        raise BadArity(f"negative vertex id in {vs}")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise BadArity(f"repeated vertex {a} in {vs}")
    return vs


def boundary(s: Simplex) -> List[Simplex]:
    """Codimension-one faces of ``s``; entry i omits ``s[i]``."""
    return [s[:i] + s[i + 1:] for i in range(len(s))]


@dataclass(frozen=True)
class ValidationReport:
    is_closed_pseudomanifold: bool
    is_connected: bool
    offending_faces: List[Tuple[Simplex, int]]
    link_check_2d: Optional[bool] = None
    duplicate_facets: List[Simplex] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_closed_pseudomanifold and self.is_connected and not self.duplicate_facets


@dataclass(frozen=True)
class Triangulation:
    """A validated closed pseudomanifold.

    Construct through :func:`build_triangulation`; the constructor itself
    performs no checks.
    """

    dimension: int
    facets: Tuple[Simplex, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def vertices(self) -> Tuple[int, ...]:
        if "vertices" not in self._cache:
            self._cache["vertices"] = tuple(sorted({v for f in self.facets for v in f}))
        return self._cache["vertices"]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def facet_index(self) -> Dict[Simplex, int]:
        if "facet_index" not in self._cache:
            self._cache["facet_index"] = {f: i for i, f in enumerate(self.facets)}
        return self._cache["facet_index"]

    @property
    def ridges(self) -> Dict[Simplex, Tuple[int, int]]:
        """Map each (n-1)-face to the indices of its two facets."""
        if "ridges" not in self._cache:
            inc = _ridge_incidence(self.facets)
            self._cache["ridges"] = {r: (fs[0], fs[1]) for r, fs in sorted(inc.items())}
        return self._cache["ridges"]

    def __len__(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        return (f"Triangulation(dimension={self.dimension}, "
                f"vertices={self.vertex_count}, facets={len(self.facets)})")


def _ridge_incidence(facets: Sequence[Simplex]) -> Dict[Simplex, List[int]]:
    inc: Dict[Simplex, List[int]] = defaultdict(list)
    for i, f in enumerate(facets):
        for r in boundary(f):
            inc[r].append(i)
    return inc


def _facet_components(facets: Sequence[Simplex], inc: Dict[Simplex, List[int]]) -> int:
    if not facets:
        return 0
    nbrs: Dict[int, List[int]] = defaultdict(list)
    for fs in inc.values():
        for a, b in combinations(fs, 2):
            nbrs[a].append(b)
            nbrs[b].append(a)
    seen = [False] * len(facets)
    comps = 0
    for start in range(len(facets)):
        if seen[start]:
            continue
        comps += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return comps


def _links_are_cycles(facets: Sequence[Simplex]) -> bool:
    links: Dict[int, Dict[int, List[int]]] = defaultdict(lambda: defaultdict(list))
    for a, b, c in facets:
        for v, x, y in ((a, b, c), (b, a, c), (c, a, b)):
            links[v][x].append(y)
            links[v][y].append(x)
    for link in links.values():
        if any(len(nb) != 2 for nb in link.values()):
            return False
        start = next(iter(link))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in link[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(link):
            return False
    return True


def _canonical_facets(n: int, facets: Iterable[Iterable[int]]) -> List[Simplex]:
    if n < 1:
        raise BadDimension(f"dimension must be >= 1, got {n}")
    out = []
    for raw in facets:
        raw = list(raw)
        if len(raw) != n + 1:
            raise BadArity(f"facet {raw} has {len(raw)} vertices, expected {n + 1}")
        out.append(simplex(raw))
    return out


def validate(n: int, facets: Iterable[Iterable[int]]) -> ValidationReport:
    """Structural report for a facet list; raises only on malformed facets.

    Duplicate facets are kept when counting incidences, so a repeated
    triangle shows up as faces lying in three facets.
    """
    fs = sorted(_canonical_facets(n, facets))
    dups = sorted({a for a, b in zip(fs, fs[1:]) if a == b})
    inc = _ridge_incidence(fs)
    offending = [(r, len(ix)) for r, ix in sorted(inc.items()) if len(ix) != 2]
    link = _links_are_cycles(fs) if n == 2 and not offending and not dups else None
    return ValidationReport(
        is_closed_pseudomanifold=not offending,
        is_connected=_facet_components(fs, inc) == 1,
        offending_faces=offending,
        link_check_2d=link,
        duplicate_facets=dups,
    )


def build_triangulation(n: int, facets: Iterable[Iterable[int]], *,
                        check_links: bool = False) -> Triangulation:
    """Canonicalize and validate a facet list.

    Facets are sorted internally and lexicographically.  With
    ``check_links`` (n = 2 only) every vertex link must be a single cycle.
    """
    fs = _canonical_facets(n, facets)
    seen = set()
    for f in fs:
        if f in seen:
            raise DuplicateFacet(f"duplicate facet {f}")
        seen.add(f)
    fs.sort()
    inc = _ridge_incidence(fs)
    bad = [(r, len(ix)) for r, ix in sorted(inc.items()) if len(ix) != 2]
    if bad:
        r, cnt = bad[0]
        raise NotPseudomanifold(
            f"{len(bad)} face(s) not in exactly two facets, e.g. {r} lies in {cnt}", bad)
    if _facet_components(fs, inc) != 1:
        raise Disconnected("facet-adjacency graph is disconnected")
    if check_links:
        if n != 2:
            raise BadDimension("link check is only implemented for n = 2")
        if not _links_are_cycles(fs):
            raise NotPseudomanifold("some vertex link is not a single cycle")
    return Triangulation(n, tuple(fs))


def relabel(T: Triangulation, mapping: Dict[int, int]) -> Triangulation:
    """Apply an injective vertex relabeling and re-canonicalize."""
    return build_triangulation(T.dimension, ([mapping[v] for v in f] for f in T.facets))


def faces(T: Triangulation, k: int) -> Tuple[Simplex, ...]:
    """All k-dimensional faces of T in lexicographic order."""
    if not 0 <= k <= T.dimension:
        raise BadDimension(f"k={k} outside 0..{T.dimension}")
    key = ("faces", k)
    if key not in T._cache:
        out = set()
        for f in T.facets:
            out.update(combinations(f, k + 1))
        T._cache[key] = tuple(sorted(out))
    return T._cache[key]


def f_vector(T: Triangulation) -> List[int]:
    return [len(faces(T, k)) for k in range(T.dimension + 1)]


def euler_characteristic(T: Triangulation) -> int:
    return sum((-1) ** k * c for k, c in enumerate(f_vector(T)))


def skeleton_adjacency(T: Triangulation) -> Dict[int, set]:
    adj: Dict[int, set] = {v: set() for v in T.vertices}
    for a, b in faces(T, 1):
        adj[a].add(b)
        adj[b].add(a)
    return adj


def is_even(T: Triangulation) -> bool:
    """True iff every vertex of a 2-dimensional T has even degree."""
    if T.dimension != 2:
        raise BadDimension("is_even is defined for n = 2 only")
    return all(len(nb) % 2 == 0 for nb in skeleton_adjacency(T).values())


# -- orientation ------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Coherent orientation: +1 means the sorted vertex order, -1 its reverse parity."""

    signs: Dict[Simplex, int]


@dataclass(frozen=True)
class NonOrientable:
    """Propagation reached a facet with both signs; ``witness`` is that facet."""

    witness: Simplex


def induced_sign(f: Simplex, sign: int, ridge: Simplex) -> int:
    """Orientation that facet ``f`` (with ``sign``) induces on a boundary face."""
    for i, v in enumerate(f):
        if v not in ridge:
            return sign * (-1 if i % 2 else 1)
    raise ValueError(f"{ridge} is not a face of {f}")


def orientability(T: Triangulation):
    """Return an :class:`Orientation` or :class:`NonOrientable`."""
    fs = T.facets
    nbrs: List[List[Tuple[int, Simplex]]] = [[] for _ in fs]
    for r, (a, b) in T.ridges.items():
        nbrs[a].append((b, r))
        nbrs[b].append((a, r))
    signs = [0] * len(fs)
    signs[0] = 1
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b, r in nbrs[a]:
            # b must induce the opposite orientation on r
            want = -induced_sign(fs[a], signs[a], r) * induced_sign(fs[b], 1, r)
            if signs[b] == 0:
                signs[b] = want
                queue.append(b)
            elif signs[b] != want:
                return NonOrientable(fs[b])
    return Orientation({f: s for f, s in zip(fs, signs)})


def is_orientable(T: Triangulation) -> bool:
    return isinstance(orientability(T), Orientation)


# -- automorphisms / isomorphisms -------------------------------------------

def _search_order(adj: Dict[int, set], vertices: Sequence[int]) -> List[int]:
    order: List[int] = []
    seen = set()
    for root in vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _complex_maps(src: Triangulation, dst: Triangulation, first_only: bool):
    if (src.dimension != dst.dimension or src.vertex_count != dst.vertex_count
            or len(src.facets) != len(dst.facets)):
        return []
    sadj, dadj = skeleton_adjacency(src), skeleton_adjacency(dst)
    if sorted(map(len, sadj.values())) != sorted(map(len, dadj.values())):
        return []
    order = _search_order(sadj, src.vertices)
    pos = {v: i for i, v in enumerate(order)}
    # facets become checkable once their last vertex (in search order) is mapped
    closing: Dict[int, List[Simplex]] = defaultdict(list)
    for f in src.facets:
        closing[max(pos[v] for v in f)].append(f)
    dfacets = set(dst.facets)
    targets = sorted(dst.vertices)
    image: Dict[int, int] = {}
    used = set()
    found = []

    def extend(i: int) -> bool:
        if i == len(order):
            found.append(dict(sorted(image.items())))
            return first_only
        v = order[i]
        deg = len(sadj[v])
        for w in targets:
            if w in used or len(dadj[w]) != deg:
                continue
            if any((image[u] in dadj[w]) != (u in sadj[v]) for u in order[:i]):
                continue
            image[v] = w
            used.add(w)
            ok = all(tuple(sorted(image[x] for x in f)) in dfacets for f in closing[i])
            if ok and extend(i + 1):
                return True
            del image[v]
            used.discard(w)
        return False

    extend(0)
    return found


def automorphisms(T: Triangulation, bound: int = AUTOMORPHISM_BOUND) -> List[Dict[int, int]]:
    """All vertex permutations preserving the facet set, sorted by image tuple."""
    if T.vertex_count > bound:
        raise TooLarge(f"{T.vertex_count} vertices exceeds automorphism bound {bound}")
    maps = _complex_maps(T, T, first_only=False)
    maps.sort(key=lambda m: tuple(m[v] for v in T.vertices))
    return maps


def find_isomorphism(A: Triangulation, B: Triangulation) -> Optional[Dict[int, int]]:
    """A vertex bijection carrying A's facets onto B's, or None."""
    maps = _complex_maps(A, B, first_only=True)
    return maps[0] if maps else None
