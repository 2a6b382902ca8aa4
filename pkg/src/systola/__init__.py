"""systola: combinatorial systolic geometry on finite simplicial complexes.

Edge-path systoles and triviality radii through covering complexes, Z2
cohomology with cup products, combinatorial essentiality certificates,
extremal projective-space triangulations, and exact evaluators for the
associated vertex and ball-growth bounds.
"""

from .bounds import (
    BoundTable,
    FVectorBounds,
    PiecewisePoly,
    ball_volume_lower_bound,
    cup_ball_bounds,
    cup_vertex_lower_bound,
    cup_vertex_total,
    delannoy_coeff,
    delannoy_table,
    essential_ball_bounds,
    essential_vertex_bound_chain,
    essential_vertex_lower_bound,
    fvector_lower_bounds,
    volume_profile,
    volume_recursion_check,
)
from .cochains import (
    RING_Z,
    RING_Z2,
    Cochain1,
    CochainK,
    class_is_nonzero,
    coboundary,
    cup_power,
    h1_basis,
    is_cocycle,
    restriction_is_zero,
    vertex_coboundary,
)
from .complexes import (
    FVector,
    InducedSubcomplex,
    SimplicialComplex,
    barycentric_subdivision,
    build_complex,
    f_vector,
    induced,
    skeleton,
)
from .covers import (
    INFINITY,
    BallProfile,
    Cover,
    ball,
    ball_profile,
    build_cover,
    cover_systole,
    edge_distance,
    homology_triviality_radius,
    homotopy_triviality_radius,
    is_pi_inessential,
    loop_norm,
    sphere,
)
from .errors import (
    CapacityError,
    CocycleError,
    DimensionError,
    DomainError,
    MalformedFaceError,
    ParameterError,
    QuotientError,
    SystolaError,
    UnknownVertexError,
)
from .essential import (
    EssentialityVerdict,
    VertexPartition,
    combinatorial_essentiality,
    is_inessential_graph,
    subdivision_vertex_lower_bound,
)
from .generators import (
    SymmetricComplex,
    gen_complete_graph,
    gen_named,
    gen_polygon,
    gen_projective_space,
    gen_symmetric_sphere,
    quotient,
)
from .serialization import (
    dumps_cochain,
    dumps_complex,
    loads_cochain,
    loads_complex,
    read_cochain,
    read_complex,
    write_cochain,
    write_complex,
)
from .verify import VerificationReport, VerificationRow, measure_cell, verify_grid

__version__ = "0.1.0"
