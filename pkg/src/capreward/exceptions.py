"""Exception types raised across the package.

Everything subclasses ValueError so callers that only know sklearn
conventions can catch the usual base class.
"""


class CapRewardError(ValueError):
    """Base class for all package-specific errors."""


class EmptyText(CapRewardError):
    """Nothing remains after text normalization."""


class EmptyCorpus(CapRewardError):
    """A vocabulary was requested from an empty corpus."""


class CaptionTooShort(CapRewardError):
    """Caption has too few tokens for the requested corruption."""


class DimensionMismatch(CapRewardError):
    """An array does not have the expected feature dimension."""


class ZeroEmbedding(CapRewardError):
    """Cosine similarity requested against a zero-norm embedding."""


class BatchTooSmall(CapRewardError):
    """Contrastive loss needs at least two pairs."""


class PrefixTooLong(CapRewardError):
    """Decoder prefix does not fit in the model's position table."""


class CaptionTooLong(CapRewardError):
    """Reference caption exceeds the decoder's maximum length."""


class MissingReferences(CapRewardError):
    """A reference-based score was requested without references."""


class MissingPrediction(CapRewardError):
    """An annotated image has no predicted caption."""


class CorpusTooSmall(CapRewardError):
    """CIDEr needs at least two distinct images to define idf."""


class ParseError(CapRewardError):
    """A data file is malformed."""


class EmptyEntry(CapRewardError):
    """A record in a data file has no content."""


class ConfigInvalid(CapRewardError):
    """A configuration value is out of its legal range."""
