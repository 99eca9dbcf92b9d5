"""Simple homomorphisms and colourings of (m,n)-mixed graphs."""

from .convexity import HullTrace, agree, between, convex_hull, hull, is_convex
from .decision import (
    CondensationDigraph,
    TwoColourCertificate,
    complete_chi_s,
    condensation,
    decide_chi_s_two,
    is_clique,
    is_simple_clique,
)
from .families import (
    cayley_2ec_clique,
    cayley_oriented_clique,
    directed_cycle,
    enumerate_2ec_complete,
    enumerate_tournaments,
    g_n,
    h_n,
    random_mixed,
    transitive_tournament,
)
from .fileformat import ParseError, parse, serialize
from .graph import (
    ARC,
    EDGE,
    Adjacency,
    AdjacencyType,
    GraphError,
    IdentificationError,
    MixedGraph,
    VertexMap,
    build,
    identify,
    is_complete,
    same_type,
    underlying,
)
from .search import (
    BudgetExceeded,
    Partition,
    brute_chi,
    brute_chi_s,
    compose,
    enumerate_min_simple_colourings,
    find_homomorphism,
    find_simple_homomorphism,
    is_colouring,
    is_homomorphism,
    is_simple_colouring,
    is_simple_homomorphism,
    quotient,
)
from .twotree import (
    NotATwoTree,
    colour_2ec_2tree,
    colour_oriented_2tree,
    random_2tree,
    recognize_2tree,
)

__version__ = "0.1.0"
