"""Exception hierarchy shared by the web basis services."""


class WebBasisError(Exception):
    """Base class for every error raised by webbasis."""


class RankError(WebBasisError, ValueError):
    """An index, rank or letter lies outside the allowed range."""


class SlotMismatchError(WebBasisError, ValueError):
    """A tensor does not have the slot signature an operation expects."""


class ScaleGuardError(WebBasisError):
    """A request exceeds the configured desk-scale ceiling."""


class ZeroDiagramError(WebBasisError):
    """A diagram has no completing state, so it evaluates to zero."""


class VerificationError(WebBasisError):
    """A verification suite reported at least one failure."""


class DiagramFormatError(WebBasisError, ValueError):
    """Diagram text could not be parsed."""
