"""Upper bounds for basket and flat plumbing numbers of links."""

from .bounds import (
    BoundEntry,
    BoundsReport,
    bk_bound_braid,
    bk_bound_diagram,
    cascade,
    evaluate,
    fp_bound_braid,
    fp_bound_diagram,
    fp_bound_refined,
    fpbk_bound_braid,
    fpbk_bound_diagram,
    fpbk_bound_signed_counts,
    genus_relations,
    report_for_braid,
    report_for_graph,
    report_for_pd,
)
from .braid import BraidWord, closure_seifert_graph, parse_braid_word
from .catalog import get_fixture, load_fixtures
from .errors import (
    BraidParseError,
    GraphError,
    InputError,
    InvariantViolation,
    OddCycleWarning,
    PDParseError,
    PDTraceError,
    PlumbingError,
    SplitLinkError,
)
from .graph import SeifertGraph
from .pd import orient_diagram, parse_pd, seifert_circles

__version__ = "0.1.0"
