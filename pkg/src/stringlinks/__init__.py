"""String links: Morse diagrams, linking invariants, the reduced free group
action, and the symbolic monoid of 2-string links."""

__version__ = "0.1.0"

from .errors import StringLinkError  # noqa: E402

__all__ = ["__version__", "StringLinkError"]
