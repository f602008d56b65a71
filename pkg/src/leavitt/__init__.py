"""Exact symbolic computation in Leavitt path algebras.

Graphs and paths, normal-form arithmetic over exact coefficient rings,
standard group gradings with homogeneous decomposition, the per-degree
local identities with certificates, grading-property checkers, and
Frobenius systems for finite grading groups.
"""

from .algebra import (
    Element,
    ElementSyntaxError,
    Monomial,
    enumerate_monomials,
    normal_form,
    normal_form_shuffled,
    parse_element,
)
from .epsilon import (
    ClassRep,
    ConstructionError,
    DegreeMismatchError,
    EpsilonReport,
    HomogeneityError,
    LocalUnitPair,
    MinimalClassSet,
    NondegeneracyWitness,
    WindowError,
    class_leq,
    check_epsilon_strong,
    check_nearly_epsilon,
    check_nondegenerate,
    check_strongly_graded,
    check_symmetric,
    common_local_unit,
    epsilon,
    local_units,
    minimal_classes,
    nmap,
)
from .frobenius import (
    FrobeniusBuildError,
    FrobeniusSystem,
    build_frobenius_system,
    projection_e,
    verify_frobenius,
)
from .grading import (
    CyclicGroup,
    DegreeMap,
    DegreeMapError,
    Group,
    GroupError,
    HomogeneousDecomposition,
    IntegerGroup,
    IntegerTupleGroup,
    TableGroup,
    check_grading_axiom,
    decompose,
    enumerate_Xg,
    parse_degree_map,
    parse_group_table,
)
from .graph import (
    Edge,
    Graph,
    GraphError,
    GraphSyntaxError,
    Path,
    Vertex,
    is_initial_subpath,
    parse_graph,
)
from .reports import Report
from .rings import (
    INTEGERS,
    RATIONALS,
    CoefficientRing,
    IntegerModRing,
    IntegerRing,
    RationalRing,
    RingError,
    parse_ring,
)
from .sampling import random_element, random_homogeneous, random_scalar

__all__ = [
    "Element",
    "ElementSyntaxError",
    "Monomial",
    "enumerate_monomials",
    "normal_form",
    "normal_form_shuffled",
    "parse_element",
    "ClassRep",
    "ConstructionError",
    "DegreeMismatchError",
    "EpsilonReport",
    "HomogeneityError",
    "LocalUnitPair",
    "MinimalClassSet",
    "NondegeneracyWitness",
    "WindowError",
    "class_leq",
    "check_epsilon_strong",
    "check_nearly_epsilon",
    "check_nondegenerate",
    "check_strongly_graded",
    "check_symmetric",
    "common_local_unit",
    "epsilon",
    "local_units",
    "minimal_classes",
    "nmap",
    "FrobeniusBuildError",
    "FrobeniusSystem",
    "build_frobenius_system",
    "projection_e",
    "verify_frobenius",
    "CyclicGroup",
    "DegreeMap",
    "DegreeMapError",
    "Group",
    "GroupError",
    "HomogeneousDecomposition",
    "IntegerGroup",
    "IntegerTupleGroup",
    "TableGroup",
    "check_grading_axiom",
    "decompose",
    "enumerate_Xg",
    "parse_degree_map",
    "parse_group_table",
    "Edge",
    "Graph",
    "GraphError",
    "GraphSyntaxError",
    "Path",
    "Vertex",
    "is_initial_subpath",
    "parse_graph",
    "Report",
    "INTEGERS",
    "RATIONALS",
    "CoefficientRing",
    "IntegerModRing",
    "IntegerRing",
    "RationalRing",
    "RingError",
    "parse_ring",
    "random_element",
    "random_homogeneous",
    "random_scalar",
    "__version__",
]

__version__ = "0.1.0"
