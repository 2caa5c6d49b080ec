"""Exception types shared across the package."""


class PrmCountError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(PrmCountError, ValueError):
    """Malformed or empty input data."""


class InvalidProfileError(PrmCountError, ValueError):
    """Dataset profile is unusable (e.g. max patch count below 1)."""


class InsufficientDataError(PrmCountError, RuntimeError):
    """A requested density class cannot be sampled from the corpus."""

    def __init__(self, classes, message):
        super().__init__(message)
        self.classes = tuple(classes)


class ShapeError(PrmCountError, ValueError):
    """Tensor shape propagation failed; carries the offending layer name."""

    def __init__(self, layer, message):
        super().__init__(f"{layer}: {message}")
        self.layer = layer


class ArchiveError(PrmCountError, ValueError):
    """Patch archive is malformed or has an unsupported version."""


class ArchiveTruncatedError(ArchiveError):
    """Patch archive ended mid-record."""


class ChecksumError(PrmCountError, ValueError):
    """Manifest entry checksum does not match the files on disk."""


class TrainingDivergedError(PrmCountError, RuntimeError):
    """Training loss became non-finite."""


class ProtocolError(PrmCountError, RuntimeError):
    """External predictor protocol violation."""


class PipelineError(PrmCountError, RuntimeError):
    """Failure while processing a patch; carries patch/image context."""
