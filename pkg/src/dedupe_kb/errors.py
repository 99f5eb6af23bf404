"""Exception hierarchy shared by every stage of the pipeline."""


class DedupeError(Exception):
    """Base class for all errors raised by dedupe-kb."""


class SelfPair(DedupeError):
    """A link or comparison was requested between a record and itself."""

    def __init__(self, record_id: str, line: int | None = None):
        self.record_id = record_id
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"self-link on record {record_id!r}{where}")


class MissingIdColumn(DedupeError):
    def __init__(self, column: str, path: str):
        self.column = column
        self.path = path
        super().__init__(f"id column {column!r} not found in {path}")


class DuplicateId(DedupeError):
    def __init__(self, record_id: str):
        self.record_id = record_id
        super().__init__(f"duplicate record id {record_id!r}")


class UnknownColumn(DedupeError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"column {column!r} is not declared in the configuration")


class MalformedRow(DedupeError):
    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"malformed row at line {line}: {detail}")


class MalformedLine(DedupeError):
    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"malformed link line {line}: {detail}")


class SchemaViolation(DedupeError):
    def __init__(self, field: str, detail: str):
        self.field = field
        super().__init__(f"config field {field!r}: {detail}")


class ProbabilityOrder(DedupeError):
    def __init__(self, name: str, low: float, high: float):
        self.name = name
        super().__init__(f"attribute {name!r}: low {low} exceeds high {high}")


class ComparatorError(DedupeError):
    """A value could not be compared; callers degrade it to missing evidence."""


class NotANumber(ComparatorError):
    def __init__(self, value: str):
        self.value = value
        super().__init__(f"not a number: {value!r}")


class MalformedCoordinate(ComparatorError):
    def __init__(self, value: str):
        self.value = value
        super().__init__(f"not a 'lat,lon' coordinate: {value!r}")


class OutOfRange(ComparatorError):
    def __init__(self, detail: str):
        super().__init__(f"coordinate out of range: {detail}")


class ContradictoryCertainty(DedupeError):
    """Fusing an exact 0 with an exact 1 has no defined posterior."""


class SchemaMismatch(DedupeError):
    def __init__(self, record_id: str, attribute: str):
        self.record_id = record_id
        self.attribute = attribute
        super().__init__(
            f"record {record_id!r} carries unknown attribute {attribute!r}"
        )


class UnknownId(DedupeError):
    def __init__(self, record_id: str):
        self.record_id = record_id
        super().__init__(f"unknown record id {record_id!r}")


class GroupTooSmall(DedupeError):
    def __init__(self, index: int, size: int):
        self.index = index
        super().__init__(f"duplicate group {index} has {size} member(s); need at least 2")
