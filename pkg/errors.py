"""Error types shared by the library, the CLI and the HTTP front end.

Each class carries the CLI exit code and HTTP status it maps to.
"""


class VintvError(Exception):
    kind = "error"
    exit_code = 1
    status = 500

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def to_record(self):
        return {"kind": self.kind, "message": self.message}


# ======== Usage (exit 2) ========
class UsageError(VintvError):
    kind = "usage"
    exit_code = 2
    status = 400


class VectorParseError(UsageError):
    kind = "parse"

    def __init__(self, position, token, reason="not a number"):
        super().__init__(f"cannot parse vector literal at token {position} ({token!r}): {reason}")
        self.position = position
        self.token = token

    def to_record(self):
        record = super().to_record()
        record.update(position=self.position, token=self.token)
        return record


class UnknownAlgorithmError(UsageError):
    def __init__(self, name, known):
        super().__init__(f"unknown algorithm {name!r}; expected one of: {', '.join(known)}")
        self.name = name


class ConfigError(UsageError):
    kind = "config"

    def __init__(self, variable, value, reason):
        super().__init__(f"{variable}={value!r}: {reason}")
        self.variable = variable


class TraceLimitError(UsageError):
    """A traced request would produce more events than allowed."""

    kind = "trace_limit"

    def __init__(self, limit, needed=None):
        detail = f" (needs {needed})" if needed is not None else ""
        super().__init__(f"trace would exceed the limit of {limit} events{detail}")
        self.limit = limit
        self.needed = needed

    def to_record(self):
        record = super().to_record()
        record.update(limit=self.limit, needed=self.needed)
        return record


# ======== Domain (exit 3) ========
class DomainError(VintvError):
    kind = "domain"
    exit_code = 3
    status = 422


class IntervalConstraintError(DomainError):
    """A (vec_len, low, high) triple that is not a vector interval."""

    def __init__(self, bound, vec_len, low, high, reason):
        super().__init__(f"invalid vector interval [{low}..{high}] for length {vec_len}: {bound} {reason}")
        self.bound = bound
        self.vec_len = vec_len
        self.low = low
        self.high = high

    def to_record(self):
        record = super().to_record()
        record.update(bound=self.bound, vec_len=self.vec_len, low=self.low, high=self.high)
        return record


class IntervalMismatchError(DomainError):
    def __init__(self, interval_len, vector_len):
        super().__init__(f"interval was validated for length {interval_len}, vector has length {vector_len}")
        self.interval_len = interval_len
        self.vector_len = vector_len


class EmptyVectorError(DomainError):
    def __init__(self, operation):
        super().__init__(f"{operation} is undefined on an empty vector")
        self.operation = operation


class LengthMismatchError(DomainError):
    def __init__(self, left, right):
        super().__init__(f"vectors must have the same length ({left} != {right})")
        self.left = left
        self.right = right


# ======== Out of bounds (exit 4) ========
class OobDiagnostic(VintvError, IndexError):
    """Checked element access outside [0, vector_length)."""

    kind = "out_of_bounds"
    exit_code = 4
    status = 422

    def __init__(self, attempted_index, vector_length, operation_name):
        super().__init__(
            f"{operation_name}: index {attempted_index} is out of bounds for vector of length {vector_length}"
        )
        self.attempted_index = attempted_index
        self.vector_length = vector_length
        self.operation_name = operation_name

    def to_record(self):
        record = super().to_record()
        record.update(
            attempted_index=self.attempted_index,
            vector_length=self.vector_length,
            operation_name=self.operation_name,
        )
        return record
