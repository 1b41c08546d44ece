"""Exception hierarchy shared by every module."""


class SegBurstError(Exception):
    pass


class ParameterError(SegBurstError, ValueError):
    """Invalid parameters or inputs (bad index, length mismatch, unknown format)."""


class ConfigurationError(SegBurstError, ValueError):
    """A labeling scheme or config that cannot be used with the channel parameters."""


class ConstructionError(SegBurstError):
    """Codebook construction failed (empty class, labeling does not separate a class)."""


class DensityError(SegBurstError, ValueError):
    """A word violates the (p, delta)-density constraint while enforcement is on."""


class DecodeError(SegBurstError):
    """Base class for decoding failures."""


class AmbiguousError(DecodeError):
    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


class NoCandidateError(DecodeError):
    pass


class LengthMismatchError(DecodeError):
    pass


class NotInCodebookError(DecodeError):
    pass
