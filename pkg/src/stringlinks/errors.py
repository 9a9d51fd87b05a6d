"""Exception hierarchy shared by every layer.

Each exception carries a short machine-readable ``reason`` slug which the
command-line front end prints alongside the human message.
"""


class StringLinkError(Exception):
    reason = "error"


class ValidationError(StringLinkError):
    """A Morse word does not describe an n-string link."""

    reason = "invalid-word"


class WidthError(ValidationError):
    reason = "width"


class ClosedComponent(ValidationError):
    reason = "closed-component"


class EndpointCount(ValidationError):
    reason = "endpoint-count"


class StrandMismatch(StringLinkError):
    reason = "strand-mismatch"


class WrongStrandCount(StringLinkError):
    reason = "wrong-strand-count"


class RankMismatch(StringLinkError):
    reason = "rank-mismatch"


class IndexOutOfRange(StringLinkError):
    reason = "index-out-of-range"


class RepeatedIndex(StringLinkError):
    reason = "repeated-index"


class NotABraid(StringLinkError):
    reason = "not-a-braid"


class MalformedCable(StringLinkError):
    reason = "malformed-cable"


class BoundExceeded(StringLinkError):
    reason = "bound-exceeded"


class UnknownAtom(StringLinkError):
    reason = "unknown-atom"


class EmptyCompanion(StringLinkError):
    reason = "empty-companion"


class UnrealizableGeneric(StringLinkError):
    reason = "unrealizable-generic"


class RegistryError(StringLinkError):
    reason = "registry"


class LayerError(StringLinkError):
    """Symbolic and diagram values were mixed in one operation."""

    reason = "layer-mismatch"


class ParseError(StringLinkError):
    reason = "parse"

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"line {line}, column {column}: {message}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class NotInvertible(StringLinkError):
    """Only braids have inverses, so negative powers of anything else fail."""

    reason = "not-invertible"
