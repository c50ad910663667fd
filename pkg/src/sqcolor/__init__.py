"""Square list-coloring toolkit for subcubic planar graphs of girth >= 6."""

from .coloring import (
    CHOOSABLE,
    INCONCLUSIVE,
    NOT_CHOOSABLE,
    ChoosabilityResult,
    chromatic_number,
    degeneracy,
    find_L_coloring,
    greedy_extend,
    is_k_choosable,
    is_proper,
)
from .discharging import (
    AuditReport,
    ChargeLedger,
    apply_r1,
    claim3_bound_check,
    discharge_audit,
    initial_charges,
    render_audit,
)
from .errors import (
    BudgetExceeded,
    GenerationFailed,
    InconsistentRotation,
    ListTooSmall,
    NotCutVertex,
    NotInClass,
    NotTwoVertex,
    ParseError,
    PartialColoring,
    PreconditionViolated,
    UnknownName,
)
from .formats import (
    from_graph6,
    load_graphs,
    parse_graphs,
    parse_lists,
    parse_one_graph,
    to_graph6,
    uniform_lists,
    write_coloring,
    write_graph_text,
    write_lists,
)
from .generate import (
    GeneratorSpec,
    canonical_code,
    enumerate_class,
    named,
    random_instance,
)
from .graph_core import (
    INF,
    Graph,
    bfs_distances,
    biconnected_components,
    cut_vertices,
    distance,
    distance_table,
    girth,
    is_connected,
    is_subcubic,
    m1_m2,
    max_degree,
    square,
)
from .planar_embed import (
    Face,
    RotationSystem,
    euler_genus_check,
    faces,
    find_planar_embedding,
    incident_faces,
)
from .reducer import (
    AvailableLists,
    CutTwoVertex,
    OneVertex,
    SixCycleConfig,
    SixCycleTwoVertex,
    SpacingViolation,
    TwoVertexCrowding,
    available_lists,
    color_square_7lists,
    extend_sixcycle,
    find_reducible_config,
    reduce_cut_two_vertex,
    verify_lemma2_tables,
)

__version__ = "0.1.0"
