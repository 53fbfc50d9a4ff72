"""Veldkamp spaces of two-point-line incidence structures.

Typical use::

    from veldkamp import build_extended_dynkin_d, enumerate_hyperplanes, build_veldkamp_space
    space = build_veldkamp_space(enumerate_hyperplanes(build_extended_dynkin_d(5)))
"""

from .errors import (
    CapacityError, ContextError, EdgeListParseError, InvalidParameterError, LabelingError,
    NotAHyperplaneError, PauliParseError, StructuralError, VeldkampError, WidthMismatchError,
)
from .gf2space import (
    ProjectiveSubspace, distinguished_subspace, find_fano_planes_with_points, intersect,
    maximal_subspaces, pasch_from_fano, representative_hyperplane, shared_lines,
)
from .hyperplanes import (
    Hyperplane, HyperplaneCatalog, canonical_index_of, containment_poset,
    enumerate_hyperplanes, is_hyperplane,
)
from .incidence import (
    IncidenceStructure, build_extended_dynkin_d, emit_edge_list, parse_edge_list, point_order,
)
from .labeling import (
    VertexLabeling, builtin_labeling, check_bijection, check_line_products,
    extract_mermin_peres, find_y_only_fano, induce, load_labeling,
)
from .pauli import PauliElement, SignedPauli, mul, mul_signed, symplectic_form, verify_magic_square
from .report import AnalysisReport, analyze
from .space import VeldkampSpace, build_veldkamp_space, full_line_size, third_point

__version__ = "0.1.0"
