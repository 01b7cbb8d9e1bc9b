"""Exception hierarchy shared by the library and the CLI.

Every error carries an ``exit_code`` so the CLI can map failures onto its
documented process exit statuses without inspecting types at each call site:

* 1 — invalid input (bad documents, bad group data, violated relations),
* 2 — a size cap was hit and the computation was refused,
* 3 — an internal invariant failed (a bug, or arithmetic gone wrong).
"""


class GcoverError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 3


class ValidationError(GcoverError):
    """Input data failed validation."""

    exit_code = 1


class DocumentError(ValidationError):
    """A job document could not be parsed.

    Carries the 1-based line number and, when known, the offending field.
    """

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        prefix = ""
        if line is not None:
            prefix = f"line {line}: "
        if field is not None:
            prefix += f"[{field}] "
        super().__init__(prefix + message)


class RelationViolated(ValidationError):
    """A purported group datum does not satisfy the required relation."""


class NotGenerating(ValidationError):
    """The supplied elements do not generate the group."""


class TrivialBranchMonodromy(ValidationError):
    """A branch point was given the identity as local monodromy."""


class CapExceeded(GcoverError):
    """A configured size cap was exceeded; the computation was not attempted."""

    exit_code = 2


class UnsupportedComputation(CapExceeded):
    """The requested computation is outside the supported size range."""


class InternalInvariantError(GcoverError):
    """An internal consistency check failed.  This is always a bug."""

    exit_code = 3
