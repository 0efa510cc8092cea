"""Exact combinatorial pairing of plain graphs with chord diagrams on
oriented lines, for the 2-loop and 3-loop hairy families."""

from .graphs import (
    DASHED,
    DEFAULT_PARITY,
    EXT_BLACK,
    INT_BLACK,
    SOLID,
    WHITE,
    Edge,
    GradingParams,
    GraphError,
    Label,
    ParityTable,
    PlainGraph,
    Vertex,
    automorphism_count,
    automorphisms,
    build_theta,
    build_y,
    canonical_certificate,
    first_betti,
    is_admissible,
    is_good,
    iso,
    iso_sign,
    label_sign,
    order,
    support_check,
    theta_graph,
    top_degree,
    y_condition,
)
from .diagrams import (
    Chord,
    ChordDiagram,
    c1_fixture,
    diagram_theta,
    diagram_y,
    negative_count,
    planetary_summary,
    rederive_chord_order,
)
from .pairing import (
    FormalSum,
    GraphOnDiagram,
    HairyGraphSpec,
    Matching,
    VerificationReport,
    brute_force_line_census,
    cardinality_report,
    counting_formula,
    enumerate_structures,
    matchings,
    pairing_value,
    per_line_structures,
    stu_resolutions,
    verify_theta,
    verify_y,
)
from .ribbons import (
    Band,
    Crossing,
    Disk,
    RibbonPresentation,
    cross_change,
    epsilon_variant,
    from_signed_diagram,
    is_degenerate,
    is_trivial,
    resolution_closure,
    standard_cross_changes,
    sweep_epsilon,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
