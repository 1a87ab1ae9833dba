"""Metric lines of graphs and the census of diameter-3 graphs with few lines."""

__version__ = "0.1.0"

from .canon import canonical_form, canonical_labeling, is_isomorphic
from .enumeration import (
    ClassificationReport,
    census,
    checkpoint_resume,
    checkpoint_save,
    classify,
    enumerate_connected,
    verify_cc_diameter3,
    verify_properties,
    verify_theorem,
)
from .families import (
    FMember,
    MSpec,
    build_figure_graph,
    build_M,
    build_Mprime,
    expected_line_count,
    family_F,
)
from .graph import (
    DistanceMatrix,
    Graph,
    bridge_count,
    build_graph,
    diameter,
    distances,
    neighborhood,
)
from .graph6 import from_graph6, to_graph6
from .lines import (
    Line,
    LineTable,
    all_lines,
    between,
    has_universal_line,
    line,
    line_family,
    line_family_i,
    satisfies_bridge_inequality,
    satisfies_cc,
)
from .structure import (
    case1_profile,
    case2_profile,
    set_R,
    set_R1,
    verify_case1_claims,
    verify_case2_claims,
)
