"""Compare the compiled and pure-Python search kernels on the same instances.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time
from itertools import combinations

from grunbaum import _kernel_py, kernel
from grunbaum.complex import faces
from grunbaum.generators import barycentric_subdivision, catalog
from grunbaum.graph import SimpleGraph


def edge_groups(G):
    return [list(ix) for ix in G.incident if ix]


def flower_snark(k):
    # a_i hub, b_i spoke ends on one cycle, c_i and d_i on the twisted double cycle
    a, b, c, d = (lambda i: 4 * i, lambda i: 4 * i + 1, lambda i: 4 * i + 2, lambda i: 4 * i + 3)
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(j))]
        if j:
            edges += [(c(i), c(j)), (d(i), d(j))]
    edges += [(c(k - 1), d(0)), (d(k - 1), c(0))]
    return SimpleGraph.from_edges(4 * k, [(min(e), max(e)) for e in edges])


def grunbaum_problem(T):
    ridges = faces(T, T.dimension - 1)
    idx = {r: i for i, r in enumerate(ridges)}
    groups = [[idx[r] for r in combinations(f, len(f) - 1)] for f in T.facets]
    return len(ridges), T.dimension + 1, groups


def vertex_problem(T, k):
    return T.vertex_count, k, [list(e) for e in faces(T, 1)]


def instances():
    out = []
    for name, G in (("petersen 3-edge", catalog("petersen")),
                    ("flower J5 3-edge", flower_snark(5)),
                    ("flower J7 3-edge", flower_snark(7)),
                    ("flower J9 3-edge", flower_snark(9))):
        out.append((name, "solve", (len(G.edges), 3, edge_groups(G)), {}))
    out.append(("k6 plane hyper-coloring", "solve",
                grunbaum_problem(catalog("k6_projective_plane")), {}))
    out.append(("sd(icosahedron) hyper-coloring", "solve",
                grunbaum_problem(barycentric_subdivision(catalog("icosahedron"))), {}))
    out.append(("sd(icosahedron) vertex 3-coloring", "solve",
                vertex_problem(barycentric_subdivision(catalog("icosahedron")), 3),
                {"require_all": True}))
    out.append(("octahedron all hyper-colorings", "enumerate_all",
                grunbaum_problem(catalog("octahedron")), {}))
    out.append(("icosahedron hyper-colorings (first 20000)", "enumerate_all",
                grunbaum_problem(catalog("icosahedron")), {"limit": 20000}))
    return out


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        res = fn()
        best = min(best, time.perf_counter() - t)
    return best, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = kernel.available()
    if len(impls) < 2:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'instance':46s}" + "".join(f"{m.IMPLEMENTATION:>12s}" for m in impls)
          + ("     speedup" if len(impls) == 2 else ""))
    for name, fn_name, (m, k, groups), kw in instances():
        times, results = [], []
        for impl in impls:
            fn = getattr(impl, fn_name)
            t, res = timeit(lambda: fn(m, k, groups, **kw), args.repeat)
            times.append(t)
            results.append(res)
        assert all(r == results[0] for r in results), name
        row = f"{name:46s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[1] / max(times[0], 1e-9):11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
