"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: usage errors -> 1, DataError -> 2,
NumericError -> 3.
"""


class OvqaError(Exception):
    """Base class for package-specific failures."""


class DataError(OvqaError):
    """Malformed, missing or inconsistent data (corpora, vocab, checkpoints)."""


class SequenceOverflowError(DataError):
    """Assembled sequence exceeds the configured maximum length.

    Raised instead of truncating: silent truncation would corrupt
    modality-ablation comparisons.
    """


class NumericError(OvqaError):
    """Non-finite values encountered where finite math is required."""
