"""Exception types shared across the library."""


class OmegalibError(Exception):
    """Base class for every domain-level error this library raises."""


class NonPositiveInput(OmegalibError):
    """A strictly positive rational was required."""


class InsufficientMass(OmegalibError):
    """A codeword request exceeds the measure left in the free pool.

    ``index`` is the zero-based position of the offending request when the
    failure happened inside a batch, else ``None``.
    """

    def __init__(self, length: int, index: int | None = None):
        self.length = length
        self.index = index
        where = f" (request index {index})" if index is not None else ""
        super().__init__(f"no free prefix can honour a length-{length} request{where}")


class TargetTooShort(OmegalibError):
    """A prefix split was asked for a target length below the stem length."""


class InvalidSequence(OmegalibError):
    """A rational sequence violates strict monotonicity or its range."""


class SequenceExhausted(InvalidSequence):
    """Fewer terms are available than were requested."""


class StageOutOfRange(OmegalibError):
    """A stage index exceeds the finite enumeration it points into."""


class LengthMismatch(OmegalibError):
    """Two prefixes that must have equal length do not."""


class UnderlongString(OmegalibError):
    """A stage string is shorter than the compression margin it must fund."""


class MeasureViolation(OmegalibError):
    """A prefix set exceeds the measure bound its level promises."""
