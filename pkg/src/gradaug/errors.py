"""Exception types raised across the package."""


class GradAugError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(GradAugError, ValueError):
    """Operands have incompatible shapes (broadcasting, matmul, batch)."""


class InvalidAxisError(GradAugError, ValueError):
    """A reduction axis is out of range for the operand's rank."""


class NonScalarRootError(GradAugError, ValueError):
    """backward() called on a tensor with more than one element."""


class NoGraphError(GradAugError, ValueError):
    """backward() called on a tensor that is not attached to a graph."""


class SingularMatrixError(GradAugError, ValueError):
    """A per-sample transform matrix is not invertible."""

    def __init__(self, batch_index, det):
        self.batch_index = batch_index
        self.det = det
        super().__init__(
            f"matrix at batch index {batch_index} is singular (det={det!r})"
        )


class DegenerateConfigurationError(GradAugError, ValueError):
    """Point correspondences do not determine a transform (rank-deficient)."""


class ChannelCountError(GradAugError, ValueError):
    """An image op received an unsupported number of channels."""


class SpecValidationError(GradAugError, ValueError):
    """A ParamSpec or layer argument fails its validity constraints."""


class MissingGradError(GradAugError, ValueError):
    """An optimizer step found parameters without populated gradients."""

    def __init__(self, names):
        self.names = list(names)
        super().__init__(
            "parameters have no gradient: " + ", ".join(self.names)
        )


class SerializationError(GradAugError, ValueError):
    """Base for pipeline document load/save failures."""


class MalformedDocumentError(SerializationError):
    """Document is not valid JSON or violates the schema.

    ``location`` is a human-readable path into the document.
    """

    def __init__(self, message, location=""):
        self.location = location
        suffix = f" (at {location})" if location else ""
        super().__init__(message + suffix)


class VersionMismatchError(SerializationError):
    """Document format_version is not supported."""


class UnknownKindError(SerializationError):
    """Document references a layer kind this build does not provide."""

    def __init__(self, kind):
        self.kind = kind
        super().__init__(f"unknown layer kind: {kind!r}")


class RngAlgorithmMismatchError(SerializationError):
    """Serialized RNG algorithm id differs from the engine's generator."""


class ConfigError(GradAugError, ValueError):
    """Benchmark configuration is invalid."""
