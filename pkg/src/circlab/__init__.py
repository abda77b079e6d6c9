"""circlab: build, transform, and classify circulant graphs."""

from .core import (
    CirculantGraph,
    ConnectionSet,
    InputError,
    JumpSet,
    LabeledGraph,
    adjacency,
    detect_circulant,
    graph_from_json,
    parse_graph,
    reflexive_reduce,
    symmetric_closure,
)
from .adams import (
    Type1Set,
    UnitMultiplier,
    adams_image,
    type1_compose,
    type1_contains,
    type1_group_check,
    type1_set,
    units,
)
from .theta import (
    ThetaImage,
    ThetaTransform,
    Type2SetResult,
    classify_theta,
    theta_exact_image,
    theta_fast,
    theta_vertex,
    type2_group_check,
    type2_set,
    vertex_permutation,
    vnm_set,
)
from .families import (
    Family8n,
    FamilyNp3,
    gen_8n_basic,
    gen_8n_extended,
    gen_np3,
    gen_np3_member,
    np3_member_elements,
    program_format,
)
from .oracle import (
    OrderBoundError,
    ScreenMismatch,
    classify_pair,
    invariant_screen,
    is_bipartite,
    isomorphic,
    oracle_bound,
    triangle_count,
    triangle_count_walks,
)
from .classification import Classification

__all__ = [
    "CirculantGraph",
    "Classification",
    "ConnectionSet",
    "Family8n",
    "FamilyNp3",
    "InputError",
    "JumpSet",
    "LabeledGraph",
    "OrderBoundError",
    "ThetaImage",
    "ThetaTransform",
    "Type1Set",
    "Type2SetResult",
    "UnitMultiplier",
    "adams_image",
    "adjacency",
    "classify_pair",
    "classify_theta",
    "detect_circulant",
    "gen_8n_basic",
    "gen_8n_extended",
    "gen_np3",
    "gen_np3_member",
    "graph_from_json",
    "invariant_screen",
    "isomorphic",
    "np3_member_elements",
    "ScreenMismatch",
    "is_bipartite",
    "oracle_bound",
    "parse_graph",
    "program_format",
    "reflexive_reduce",
    "symmetric_closure",
    "triangle_count_walks",
    "theta_exact_image",
    "theta_fast",
    "theta_vertex",
    "triangle_count",
    "type1_compose",
    "type1_contains",
    "type1_group_check",
    "type1_set",
    "type2_group_check",
    "type2_set",
    "units",
    "vertex_permutation",
    "vnm_set",
]
