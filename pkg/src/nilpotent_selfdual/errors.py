"""Exception hierarchy.

Every error carries a machine-readable ``code`` and the process exit status
the CLI maps it to.
"""

from __future__ import annotations


class NilpotentError(Exception):
    code = "error"
    exit_status = 1


class UsageError(NilpotentError, ValueError):
    """Unparseable input: bad form string, bad label syntax, bad arguments."""

    code = "usage"
    exit_status = 2

    def __init__(self, message: str, token: str | None = None, code: str | None = None):
        super().__init__(message)
        self.token = token
        if code is not None:
            self.code = code


class ValidationError(NilpotentError, ValueError):
    """Well-formed input that violates a mathematical constraint."""

    code = "validation"
    exit_status = 3

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class PartitionError(ValidationError):
    code = "validation.partition"


class TrivialPartitionError(PartitionError):
    """Raised where a parity predicate is asked about the partition 1^n."""

    code = "validation.trivial_partition"


class FormError(ValidationError):
    code = "validation.form"


class LabelError(ValidationError):
    code = "validation.label"


class DataIntegrityError(NilpotentError):
    code = "data.integrity"
    exit_status = 4


class OracleMismatch(NilpotentError):
    code = "oracle.mismatch"
    exit_status = 5
