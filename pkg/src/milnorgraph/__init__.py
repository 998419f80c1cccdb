"""Rational monodromy of Milnor fibers of graphic arrangements.

A signed graph with loops defines a central arrangement of hyperplanes
x_i = 0 (loops) and x_i + s x_j = 0 (signed edges).  This package computes
its intersection lattice, the degree-one Aomoto Betti numbers beta_p over
F_p, nonresonance certificates, and the cyclotomic decomposition of the first
homology of the Milnor fiber.
"""

__version__ = "0.1.0"

from .aomoto import beta1, beta_p, brute_force_beta_p, cocycle_space, os2_matrix_beta, sigma
from .arrangement import (
    Arrangement,
    Flat,
    Hyperplane,
    Polynomial,
    Shape,
    build_arrangement,
    center,
    flats,
    is_dense,
    m_list,
    pencil,
    poincare_polynomial,
    rank2_profile,
)
from .exceptions import CapExceeded, GraphFormatError, PreconditionError, TheoremViolation
from .fields import FieldTag, WeightVector
from .graph import (
    SignedGraph,
    UnsignedGraph,
    canonical_form,
    complete_graph,
    coxeter_d,
    enumerate_graphs,
    parse_graph,
    serialize,
    switch,
    underlying,
)
from .milnor import (
    CyclotomicDecomposition,
    ExceptionalClass,
    classify_exceptional,
    h1_decomposition,
    sharpness_report,
    twisted_betti_equimonodromic,
)
from .resonance import (
    Found,
    NotFoundWithinBound,
    admissibility_search,
    certified_vanishing_divisors,
    deligne_b3_coxeter_d,
    is_k_nonresonant,
    is_nonresonant,
    vanishing_certificate,
)
