"""Tableau complexes: simplicial complexes whose facets are tableaux.

Construction from poset problems and Young shapes, face enumeration,
vertex decompositions and shellings, K-polynomials, recognition of pure
complexes, and tableau formulas for vexillary Grothendieck polynomials.
"""

__version__ = "0.1.0"

from .complexes import (
    DEFAULT_MAX_FACES,
    TableauComplex,
    Vertex,
    VertexKind,
    build_complex,
    complex_from_problem,
)
from .decompose import (
    DecompositionTree,
    ShellingCertificate,
    Topology,
    choose_pivot,
    h_vector,
    homeomorphism_certificate,
    new_face,
    shelling_order,
    verify_shelling,
    vertex_decompose,
)
from .errors import (
    CapExceeded,
    InvariantViolation,
    MethodDisagreement,
    SearchBudgetExceeded,
    TableauComplexError,
    ValidationError,
)
from .kpoly import (
    divide_phantom,
    hilbert_coarse_check,
    kpoly,
    kpoly_faces,
    kpoly_interior,
    kpoly_recursive,
    kpoly_shelling,
    t_var,
)
from .laurent import LaurentPolynomial, Var
from .poset import (
    DEFAULT_MAX_TABLEAUX,
    FinitePoset,
    PosetTableauProblem,
    build_poset,
    chain_poset,
    enumerate_tableaux,
    linear_extension,
)
from .structure import (
    AbstractComplex,
    Recognition,
    abstract_from_tableau_complex,
    boundary_of_simplex,
    find_pure_factor_partition,
    is_pure_factor,
    join_complexes,
    pure_factor_size,
    recognize_tableau_complex,
)
from .vexillary import (
    diagram,
    grothendieck,
    is_grassmannian,
    is_vexillary,
    jacobi_trudi_schur,
    schubert_lowest_terms,
    shape_and_flagging_of,
    specialize_buch,
    specialize_schubert,
    young_substitution,
)
from .young import (
    Partition,
    SkewShape,
    YoungSVT,
    empty_face_tableau,
    enumerate_svt,
    is_buch_semistandard,
    is_limit_semistandard,
    render_tableau,
    shape_to_problem,
    young_complex,
)
