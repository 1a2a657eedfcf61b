"""Exception hierarchy."""


class AnalogOfdmError(Exception):
    """Base class for all library errors."""


class InvalidArgumentError(AnalogOfdmError, ValueError):
    """An argument violates an operation's precondition."""


class ResolutionError(InvalidArgumentError):
    """Simulation grid too coarse to resolve a chirp."""


class EqualizationError(AnalogOfdmError):
    """One-tap equalization hit a (near-)zero channel bin."""

    def __init__(self, bins, floor):
        self.bins = list(bins)
        self.floor = floor
        super().__init__(
            f"|H[i]| < {floor:g} at bins {self.bins}; refusing to divide"
        )


class PrefixLemmaError(AnalogOfdmError):
    """Discard-prefix output is not the circular convolution it should be."""
