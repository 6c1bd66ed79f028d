"""Exception types shared by the frontends, the graph layer and the engine."""


class PlumbingError(Exception):
    """Base class. ``code`` is the machine-readable tag used in JSON output."""

    code = "error"


class InputError(PlumbingError, ValueError):
    code = "input_error"


class BraidParseError(InputError):
    code = "braid_parse"


class PDParseError(InputError):
    code = "pd_parse"


class PDTraceError(InputError):
    code = "pd_trace"


class GraphError(InputError):
    code = "graph_invalid"


class SplitLinkError(InputError):
    """Raised where a connected diagram (non-split link) is required."""

    code = "split_link"


class InvariantViolation(PlumbingError):
    """An internal identity failed; indicates a bug rather than bad input."""

    code = "invariant_violation"


class OddCycleWarning(UserWarning):
    """A signed graph has an odd cycle, so it cannot come from a diagram."""
