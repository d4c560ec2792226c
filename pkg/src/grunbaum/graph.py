"""Simple graphs and the edge-coloring machinery behind the König pipeline."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernel
from .complex import Simplex, Triangulation
from .errors import InvalidGraph, NotBipartiteError, NotRegular

Edge = Tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices ``0..vertex_count-1``; edges as sorted pairs."""

    vertex_count: int
    edges: Tuple[Edge, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "SimpleGraph":
        out = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidGraph(f"edge ({u}, {v}) out of range 0..{vertex_count - 1}")
            e = (u, v) if u < v else (v, u)
            if e in out:
                raise InvalidGraph(f"parallel edge {e}")
            out.add(e)
        return cls(vertex_count, tuple(sorted(out)))

    @property
    def adjacency(self) -> List[List[int]]:
        if "adj" not in self._cache:
            adj: List[List[int]] = [[] for _ in range(self.vertex_count)]
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            for nb in adj:
                nb.sort()
            self._cache["adj"] = adj
        return self._cache["adj"]

    @property
    def incident(self) -> List[List[int]]:
        """Edge indices at each vertex."""
        if "inc" not in self._cache:
            inc: List[List[int]] = [[] for _ in range(self.vertex_count)]
            for i, (u, v) in enumerate(self.edges):
                inc[u].append(i)
                inc[v].append(i)
            self._cache["inc"] = inc
        return self._cache["inc"]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_regular(self, d: int) -> bool:
        return all(len(nb) == d for nb in self.adjacency)

    def without_edges(self, drop) -> "SimpleGraph":
        drop = set(drop)
        return SimpleGraph(self.vertex_count, tuple(e for e in self.edges if e not in drop))

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={self.vertex_count}, edges={len(self.edges)})"


@dataclass(frozen=True)
class Bipartition:
    side: Tuple[int, ...]

    def part(self, s: int) -> List[int]:
        return [v for v, x in enumerate(self.side) if x == s]


@dataclass(frozen=True)
class NotBipartite:
    """Negative answer from :func:`bipartition`; ``cycle`` is an odd closed walk's vertices."""

    cycle: Tuple[int, ...]


@dataclass(frozen=True)
class Matching:
    edges: Tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class EdgeColoring:
    color: Dict[Edge, int]
    k: int

    def classes(self) -> List[List[Edge]]:
        out: List[List[Edge]] = [[] for _ in range(self.k)]
        for e, c in sorted(self.color.items()):
            out[c].append(e)
        return out


def is_connected(G: SimpleGraph) -> bool:
    if G.vertex_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in G.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.vertex_count


def is_proper_edge_coloring(G: SimpleGraph, color: Dict[Edge, int]) -> bool:
    if set(color) != set(G.edges):
        return False
    for inc in G.incident:
        seen = set()
        for i in inc:
            c = color[G.edges[i]]
            if c in seen:
                return False
            seen.add(c)
    return True


def facet_adjacency(T: Triangulation) -> Tuple[SimpleGraph, Dict[Edge, Simplex]]:
    """Graph on facet indices, adjacent iff the facets share an (n-1)-face.

    Vertex ``i`` is ``T.facets[i]``.  The second value maps each graph
    edge to the shared face.
    """
    edge_face: Dict[Edge, Simplex] = {}
    for r, (a, b) in T.ridges.items():
        e = (a, b) if a < b else (b, a)
        edge_face[e] = r
    G = SimpleGraph.from_edges(len(T.facets), edge_face)
    return G, edge_face


def bipartition(G: SimpleGraph):
    """Breadth-first 2-coloring, component by component.

    Returns :class:`Bipartition` or :class:`NotBipartite` with an odd cycle.
    """
    side = [-1] * G.vertex_count
    parent = [-1] * G.vertex_count
    for root in range(G.vertex_count):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return NotBipartite(_odd_cycle(parent, u, w))
    return Bipartition(tuple(side))


def _odd_cycle(parent: Sequence[int], u: int, w: int) -> Tuple[int, ...]:
    def path(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = path(u), path(w)
    on_w = set(pw)
    lca = next(x for x in pu if x in on_w)
    left = pu[:pu.index(lca) + 1]
    right = pw[:pw.index(lca)]
    return tuple(left + right[::-1])


def max_bipartite_matching(G: SimpleGraph, B: Bipartition) -> Matching:
    """Maximum matching by augmenting paths from side-0 vertices in index order."""
    for u, v in G.edges:
        if B.side[u] == B.side[v]:
            raise NotBipartiteError(f"edge ({u}, {v}) inside one side")
    mate = [-1] * G.vertex_count

    def augment(u: int, seen: List[bool]) -> bool:
        # explicit stack keeps deep augmenting paths off the Python call stack
        stack = [(u, iter(G.adjacency[u]))]
        trail = []
        while stack:
            x, it = stack[-1]
            advanced = False
            for w in it:
                if seen[w]:
                    continue
                seen[w] = True
                if mate[w] < 0:
                    trail.append((x, w))
                    for a, b in trail:
                        mate[a], mate[b] = b, a
                    return True
                trail.append((x, w))
                stack.append((mate[w], iter(G.adjacency[mate[w]])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if trail:
                    trail.pop()
        return False

    for u in range(G.vertex_count):
        if B.side[u] == 0 and mate[u] < 0:
            augment(u, [False] * G.vertex_count)
    pairs = sorted((min(u, mate[u]), max(u, mate[u])) for u in range(G.vertex_count)
                   if mate[u] > u)
    return Matching(tuple(pairs))


def regular_bipartite_edge_coloring(G: SimpleGraph, d: int) -> EdgeColoring:
    """Proper d-edge-coloring of a d-regular bipartite graph.

    Each round extracts a perfect matching (one exists by König/Hall) and
    gives it the next color.
    """
    if not G.is_regular(d):
        raise NotRegular(f"graph is not {d}-regular")
    B = bipartition(G)
    if isinstance(B, NotBipartite):
        raise NotBipartiteError(f"odd cycle {B.cycle}")
    color: Dict[Edge, int] = {}
    H = G
    for c in range(d):
        M = max_bipartite_matching(H, B)
        if 2 * len(M) != G.vertex_count:
            raise AssertionError("no perfect matching in a regular bipartite graph")
        for e in M.edges:
            color[e] = c
        H = H.without_edges(M.edges)
    return EdgeColoring(color, d)


def canonical_colors(colors: Sequence[int]) -> List[int]:
    """Relabel colors in order of first occurrence."""
    remap: Dict[int, int] = {}
    return [remap.setdefault(c, len(remap)) for c in colors]


def exact_edge_coloring(G: SimpleGraph, k: int) -> Optional[EdgeColoring]:
    """Proper k-edge-coloring by exhaustive search, or None if there is none.

    Colors are relabeled by first occurrence in edge order.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not G.edges:
        return EdgeColoring({}, k)
    if any(len(inc) > k for inc in G.incident):
        return None
    sol = kernel.solve(len(G.edges), k, [inc for inc in G.incident if len(inc) > 1])
    if sol is None:
        return None
    return EdgeColoring(dict(zip(G.edges, canonical_colors(sol))), k)


def bridges(G: SimpleGraph) -> List[Edge]:
    """Bridges via one iterative depth-first low-link pass."""
    n = G.vertex_count
    disc = [-1] * n
    low = [0] * n
    out: List[Edge] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(G.adjacency[root]))]
        while stack:
            u, pu, it = stack[-1]
            pushed = False
            for w in it:
                if w == pu:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(G.adjacency[w])))
                    pushed = True
                    break
                low[u] = min(low[u], disc[w])
            if not pushed:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.append((min(p, u), max(p, u)))
    return sorted(out)


def is_snark(G: SimpleGraph) -> bool:
    """Connected, cubic, bridgeless and not 3-edge-colorable."""
    return (G.vertex_count > 0 and G.is_regular(3) and is_connected(G)
            and not bridges(G) and exact_edge_coloring(G, 3) is None)


def find_graph_isomorphism(G: SimpleGraph, H: SimpleGraph) -> Optional[Dict[int, int]]:
    """Vertex bijection G -> H preserving adjacency, by degree-pruned backtracking."""
    if G.vertex_count != H.vertex_count or len(G.edges) != len(H.edges):
        return None
    if sorted(map(len, G.adjacency)) != sorted(map(len, H.adjacency)):
        return None
    gadj = [set(nb) for nb in G.adjacency]
    hadj = [set(nb) for nb in H.adjacency]
    order: List[int] = []
    seen = set()
    for root in range(G.vertex_count):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in G.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    image: Dict[int, int] = {}
    used = [False] * H.vertex_count

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(H.vertex_count):
            if used[w] or len(hadj[w]) != len(gadj[v]):
                continue
            if any((image[u] in hadj[w]) != (u in gadj[v]) for u in order[:i]):
                continue
            image[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            del image[v]
            used[w] = False
        return False

    return dict(sorted(image.items())) if extend(0) else None
