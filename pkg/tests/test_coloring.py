from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grunbaum.coloring import (
    BLACK,
    WHITE,
    FacetTwoColoring,
    GrunbaumColoring,
    VertexColoring,
    count_grunbaum_nonisomorphic,
    enumerate_grunbaum,
    exact_grunbaum,
    facet_two_coloring,
    grunbaum_from_two_coloring,
    grunbaum_from_vertex4,
    grunbaum_tripartite,
    is_proper_vertex_coloring,
    is_valid_two_coloring,
    quadrangulate,
    remove_color_class,
    scalene_labeling,
    split_class,
    vertex_classes,
    vertex_coloring_exact,
    verify_grunbaum,
)
from grunbaum.complex import boundary, euler_characteristic, faces, is_even, relabel
from grunbaum.errors import (
    BadDimension,
    InvalidColoring,
    InvalidTwoColoring,
    MissingFace,
    NotDistinct,
    NotFourColoring,
    NotTripartite,
    TooLarge,
    TriangleInequalityViolated,
)
from grunbaum.generators import (
    barycentric_subdivision,
    bipyramidal_crown,
    catalog,
    cross_polytope,
    cycle,
    triangular_torus_parts,
)
from grunbaum.graph import exact_edge_coloring, facet_adjacency

from corpus import small_triangulations, two_colorable_corpus
from oracles import brute_grunbaum


def octahedron():
    return catalog("octahedron")


class TestFacetTwoColoring:
    def test_octahedron(self):
        T = octahedron()
        c = facet_two_coloring(T)
        assert c is not None and is_valid_two_coloring(T, c)
        assert c.color[T.facets[0]] == BLACK
        assert len(c.facets_of(BLACK)) == len(c.facets_of(WHITE)) == 4

    def test_tetrahedron(self):
        assert facet_two_coloring(catalog("tetrahedron")) is None

    @pytest.mark.parametrize("m", range(3, 11))
    def test_cycles(self, m):
        assert (facet_two_coloring(cycle(m)) is not None) == (m % 2 == 0)

    def test_even_spheres_in_corpus_are_two_colorable(self):
        checked = 0
        for _, T, _ in two_colorable_corpus():
            if T.dimension == 2 and euler_characteristic(T) == 2 and is_even(T):
                assert facet_two_coloring(T) is not None
                checked += 1
        assert checked > 5

    def test_even_icosahedron_control(self):
        # odd-degree sphere: never 2-colorable (a vertex of odd degree has an odd facet cycle)
        assert not is_even(catalog("icosahedron"))
        assert facet_two_coloring(catalog("icosahedron")) is None


class TestMatchingConstruction:
    def test_octahedron(self):
        T = octahedron()
        g = grunbaum_from_two_coloring(T, facet_two_coloring(T))
        assert len(g.color) == 12 and set(g.color.values()) == {0, 1, 2}
        assert verify_grunbaum(T, g)
        assert g.color[faces(T, 1)[0]] == 0

    def test_16_cell(self):
        T, c = cross_polytope(3)
        g = grunbaum_from_two_coloring(T, c)
        assert len(g.color) == 32 and set(g.color.values()) == {0, 1, 2, 3}
        assert verify_grunbaum(T, g)

    def test_c6_gives_vertex_two_coloring(self):
        T = cycle(6)
        g = grunbaum_from_two_coloring(T, facet_two_coloring(T))
        vcol = {r[0]: c for r, c in g.color.items()}
        assert sorted(vcol) == list(range(6))
        assert all(vcol[a] != vcol[b] for a, b in T.facets)

    def test_invalid_input(self):
        T = octahedron()
        bad = FacetTwoColoring({f: BLACK for f in T.facets})
        with pytest.raises(InvalidTwoColoring):
            grunbaum_from_two_coloring(T, bad)

    def test_corpus(self):
        corpus = two_colorable_corpus()
        assert len(corpus) >= 100
        assert {T.dimension for _, T, _ in corpus} >= {1, 2, 3, 4}
        for name, T, c in corpus:
            assert verify_grunbaum(T, grunbaum_from_two_coloring(T, c)), name

    def test_deterministic(self):
        T = barycentric_subdivision(catalog("icosahedron"))
        c = facet_two_coloring(T)
        assert grunbaum_from_two_coloring(T, c) == grunbaum_from_two_coloring(T, c)


class TestVerify:
    def test_all_zero_fails(self):
        T = octahedron()
        assert not verify_grunbaum(T, GrunbaumColoring({e: 0 for e in faces(T, 1)}))

    def test_missing_face(self):
        T = octahedron()
        with pytest.raises(MissingFace):
            verify_grunbaum(T, GrunbaumColoring({faces(T, 1)[0]: 0}))

    @pytest.mark.parametrize("perm", list(permutations(range(3))))
    def test_color_permutation_closure(self, perm):
        T = octahedron()
        g = exact_grunbaum(T)
        assert verify_grunbaum(T, g.permuted(perm))

    def test_tetrahedron_vertex_rule_witness(self):
        T = catalog("tetrahedron")
        v = vertex_coloring_exact(T, 4)
        assert verify_grunbaum(T, grunbaum_from_vertex4(T, v))


class TestVertexColoring:
    def test_octahedron_three(self):
        T = octahedron()
        v = vertex_coloring_exact(T, 3)
        assert v is not None and is_proper_vertex_coloring(T, v)
        classes = vertex_classes(v)
        assert sorted(map(sorted, classes)) == [[0, 3], [1, 4], [2, 5]]

    def test_k6(self):
        T = catalog("k6_projective_plane")
        assert vertex_coloring_exact(T, 5) is None
        assert vertex_coloring_exact(T, 6) is not None

    def test_icosahedron_chromatic_number(self):
        T = catalog("icosahedron")
        assert vertex_coloring_exact(T, 3) is None
        v = vertex_coloring_exact(T, 4)
        assert v is not None and is_proper_vertex_coloring(T, v)

    def test_surjective(self):
        T = octahedron()
        v = vertex_coloring_exact(T, 4)
        assert v is not None and set(v.color.values()) == {0, 1, 2, 3}
        assert vertex_coloring_exact(T, 7) is None

    def test_split_class(self):
        T = octahedron()
        v4 = split_class(vertex_coloring_exact(T, 3))
        assert v4.k == 4 and is_proper_vertex_coloring(T, v4)


class TestVertexFourColoringRule:
    def test_tetrahedron(self):
        T = catalog("tetrahedron")
        v = VertexColoring({0: 0, 1: 1, 2: 2, 3: 3}, 4)
        g = grunbaum_from_vertex4(T, v)
        assert g.color == {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2}
        assert verify_grunbaum(T, g)

    def test_icosahedron(self):
        T = catalog("icosahedron")
        assert verify_grunbaum(T, grunbaum_from_vertex4(T, vertex_coloring_exact(T, 4)))

    def test_octahedron_split(self):
        T = octahedron()
        v = split_class(vertex_coloring_exact(T, 3))
        assert verify_grunbaum(T, grunbaum_from_vertex4(T, v))

    def test_three_coloring_rejected(self):
        T = octahedron()
        v3 = vertex_coloring_exact(T, 3)
        with pytest.raises(NotFourColoring):
            grunbaum_from_vertex4(T, VertexColoring(v3.color, 4))

    def test_dimension(self):
        T, _ = cross_polytope(3)
        with pytest.raises(BadDimension):
            grunbaum_from_vertex4(T, VertexColoring({}, 4))

    def test_soundness_on_corpus(self):
        count = 0
        extra = [T for _, T, _ in two_colorable_corpus() if T.dimension == 2][:20]
        for T in [t for _, t in small_triangulations()] + extra:
            if T.dimension != 2:
                continue
            v = vertex_coloring_exact(T, 4)
            if v is not None:
                assert verify_grunbaum(T, grunbaum_from_vertex4(T, v))
                count += 1
        assert count >= 5


class TestTripartite:
    def test_octahedron(self):
        T = octahedron()
        g = grunbaum_tripartite(T, [[0, 3], [1, 4], [2, 5]])
        assert verify_grunbaum(T, g)
        assert g.color[(0, 1)] == 0 and g.color[(1, 2)] == 1 and g.color[(0, 2)] == 2

    def test_torus(self):
        T = catalog("triangular_torus_3x3")
        assert (T.vertex_count, len(T.facets)) == (9, 18)
        parts = triangular_torus_parts()
        assert sorted(map(len, parts)) == [3, 3, 3]
        assert verify_grunbaum(T, grunbaum_tripartite(T, parts))

    @pytest.mark.parametrize("parts", [[[0, 1], [2], [3]], [[0], [1, 2], [3]],
                                       [[0, 3], [1], [2]]])
    def test_tetrahedron_fails(self, parts):
        with pytest.raises(NotTripartite):
            grunbaum_tripartite(catalog("tetrahedron"), parts)

    def test_partition_must_cover(self):
        with pytest.raises(NotTripartite):
            grunbaum_tripartite(octahedron(), [[0, 3], [1, 4], [2]])


class TestExactGrunbaum:
    def test_k6_none(self):
        assert exact_grunbaum(catalog("k6_projective_plane")) is None

    @pytest.mark.parametrize("name", ["tetrahedron", "octahedron", "icosahedron",
                                      "k7_moebius_torus"])
    def test_colorable(self, name):
        T = catalog(name)
        g = exact_grunbaum(T)
        assert g is not None and verify_grunbaum(T, g)
        assert g.color[faces(T, T.dimension - 1)[0]] == 0

    def test_bound(self):
        with pytest.raises(TooLarge):
            exact_grunbaum(barycentric_subdivision(catalog("icosahedron")))

    def test_two_colorable_implies_colorable(self):
        for name, T, c in two_colorable_corpus():
            if len(faces(T, T.dimension - 1)) <= 60:
                assert exact_grunbaum(T) is not None, name

    @pytest.mark.parametrize("name,T", small_triangulations())
    def test_agrees_with_dual_tait(self, name, T):
        if T.dimension != 2:
            return
        G, _ = facet_adjacency(T)
        assert (exact_grunbaum(T) is None) == (exact_edge_coloring(G, 3) is None)

    @pytest.mark.parametrize("name,T", [(n, t) for n, t in small_triangulations()
                                        if len(faces(t, t.dimension - 1)) <= 12])
    def test_enumeration_matches_brute_force(self, name, T):
        ridges, brute = brute_grunbaum(T.facets)
        assert list(ridges) == list(faces(T, T.dimension - 1))
        ours = enumerate_grunbaum(T)
        assert sorted(ours) == sorted(tuple(int(x) for x in row) for row in brute)
        assert (exact_grunbaum(T) is None) == (len(brute) == 0)


class TestCounting:
    def test_octahedron_two(self):
        assert count_grunbaum_nonisomorphic(octahedron()) == 2

    def test_k6_zero(self):
        assert count_grunbaum_nonisomorphic(catalog("k6_projective_plane")) == 0

    def test_tetrahedron_one(self):
        assert count_grunbaum_nonisomorphic(catalog("tetrahedron")) == 1

    @settings(max_examples=8, deadline=None)
    @given(st.permutations(range(6)))
    def test_relabel_invariance(self, perm):
        T = relabel(octahedron(), dict(zip(range(6), perm)))
        assert count_grunbaum_nonisomorphic(T) == 2

    def test_bound(self):
        with pytest.raises(TooLarge):
            count_grunbaum_nonisomorphic(catalog("icosahedron"))


class TestQuadrangulate:
    def test_octahedron(self):
        T = octahedron()
        g = grunbaum_from_two_coloring(T, facet_two_coloring(T))
        for drop in range(3):
            Q = quadrangulate(T, g, drop)
            assert len(Q.faces) == 4 and Q.is_valid()
            assert Q.euler_characteristic() == 2
            assert len(Q.edges) == 12 - 4

    def test_k7_torus(self):
        T = catalog("k7_moebius_torus")
        g = grunbaum_from_two_coloring(T, facet_two_coloring(T))
        Q = quadrangulate(T, g, 0)
        assert (len(Q.vertices), len(Q.edges), len(Q.faces)) == (7, 14, 7)
        assert Q.is_valid() and Q.euler_characteristic() == 0

    def test_corpus_properties(self):
        for _, T, c in two_colorable_corpus():
            if T.dimension != 2:
                continue
            g = grunbaum_from_two_coloring(T, c)
            Q = quadrangulate(T, g, 1)
            assert Q.is_valid()
            assert Q.euler_characteristic() == euler_characteristic(T)
            assert Q.vertices == T.vertices
            assert len(faces(T, 1)) - len(Q.edges) == len(T.facets) // 2

    def test_errors(self):
        with pytest.raises(BadDimension):
            quadrangulate(cycle(6), GrunbaumColoring({}), 0)
        T = octahedron()
        with pytest.raises(InvalidColoring):
            quadrangulate(T, GrunbaumColoring({e: 0 for e in faces(T, 1)}), 0)
        with pytest.raises(InvalidColoring):
            quadrangulate(T, exact_grunbaum(T), 3)


class TestRemoveColorClass:
    def test_16_cell(self):
        T, c = cross_polytope(3)
        g = grunbaum_from_two_coloring(T, c)
        for drop in range(4):
            cells = remove_color_class(T, g, drop)
            assert cells.count == 8
            used = [f for a, b, _ in cells.cells for f in (a, b)]
            assert sorted(used) == sorted(T.facets)

    def test_crowned_16_cell(self):
        T, c = bipyramidal_crown(*cross_polytope(3))
        assert (T.dimension, len(T.facets)) == (4, 32)
        g = grunbaum_from_two_coloring(T, c)
        assert remove_color_class(T, g, 2).count == 16

    def test_dimension(self):
        T = octahedron()
        with pytest.raises(BadDimension):
            remove_color_class(T, exact_grunbaum(T), 0)


class TestScalene:
    def test_octahedron_345(self):
        T = octahedron()
        g = exact_grunbaum(T)
        lab = scalene_labeling(T, g, (3, 4, 5))
        assert lab.coherence_checked
        for f in T.facets:
            vals = [lab.value[r] for r in boundary(f)]
            assert len(set(vals)) == 3
        for r, col in g.color.items():
            assert lab.value[r] == (3, 4, 5)[col]

    def test_degenerate_triangle(self):
        T = octahedron()
        with pytest.raises(TriangleInequalityViolated):
            scalene_labeling(T, exact_grunbaum(T), (1, 2, 3))

    def test_repeated(self):
        T = octahedron()
        with pytest.raises(NotDistinct):
            scalene_labeling(T, exact_grunbaum(T), (3, 3, 5))

    def test_16_cell_unchecked(self):
        T, c = cross_polytope(3)
        lab = scalene_labeling(T, grunbaum_from_two_coloring(T, c), (1, 2, 3, 4))
        assert not lab.coherence_checked
        assert set(lab.value.values()) == {1.0, 2.0, 3.0, 4.0}
