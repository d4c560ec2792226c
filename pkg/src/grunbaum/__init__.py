"""Facet 2-colorings and Grünbaum hyper-colorings of closed n-manifold triangulations."""

from .coloring import (
    BLACK,
    WHITE,
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
    remove_color_class,
    scalene_labeling,
    vertex_coloring_exact,
    verify_grunbaum,
)
from .complex import (
    Triangulation,
    automorphisms,
    build_triangulation,
    euler_characteristic,
    faces,
    is_even,
    orientability,
)
from .generators import barycentric_subdivision, bipyramidal_crown, catalog, cross_polytope, glue
from .graph import (
    SimpleGraph,
    bipartition,
    exact_edge_coloring,
    facet_adjacency,
    is_snark,
    max_bipartite_matching,
    regular_bipartite_edge_coloring,
)

__version__ = "0.1.0"
