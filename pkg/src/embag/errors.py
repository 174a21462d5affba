"""Exception taxonomy.

Every error carries a stable machine-readable ``code`` so the CLI can emit
one-line, parsable failures. Subclasses of :class:`InvalidArgumentError`
signal caller mistakes (bad config, bad bounds) and map to exit status 2;
everything else maps to exit status 1.
"""


class EmbagError(Exception):
    """Base class for all library errors."""

    code = "RUNTIME"


class InvalidArgumentError(EmbagError, ValueError):
    """A caller-supplied value violates a documented precondition."""

    code = "INVALID_ARGUMENT"


class PartitionBoundsError(InvalidArgumentError):
    """Meta-class count D is outside [1, number of classes]."""

    code = "PARTITION_BOUNDS"


class DataFormatError(InvalidArgumentError):
    """An input file or split descriptor failed validation."""

    code = "DATA_FORMAT"


class MissingLabelError(EmbagError, LookupError):
    """A dataset label is absent from the partition it is relabeled with."""

    code = "MISSING_LABEL"


class DegenerateEmbeddingError(EmbagError):
    """A raw embedding had (near-)zero norm and cannot be normalized."""

    code = "DEGENERATE_EMBEDDING"


class EmptyStratumError(EmbagError):
    """A pairwise statistic was requested for an empty pair stratum."""

    code = "EMPTY_STRATUM"
