"""Exception hierarchy.

Errors are grouped into families so the CLI can map each family to a
distinct exit code: WAV container problems, lexicon problems, capacity
overruns, and failures while recovering a payload.
"""


class DuostegoError(Exception):
    """Base class for every error raised by this package."""


# WAV container ------------------------------------------------------------

class WavError(DuostegoError):
    """A RIFF/WAVE byte stream could not be parsed or is unsupported."""


class NotRiffError(WavError):
    """Input is missing the RIFF/WAVE magic."""


class UnsupportedDepthError(WavError):
    """Bits per sample is not 16."""


class UnsupportedCodecError(WavError):
    """Format tag is not integer PCM (1), or the fmt chunk is nonsense."""


class TruncatedError(WavError):
    """Declared chunk sizes exceed the available bytes, or a sample is cut off."""


class MissingChunkError(WavError):
    """The container has no fmt or no data chunk."""


# Payload framing ----------------------------------------------------------

class OversizeError(DuostegoError):
    """Bit string too long for the 32-bit length header."""


class LengthMismatchError(DuostegoError):
    """A stated length is inconsistent with the data it describes."""


class NotByteAlignedError(DuostegoError):
    """Bit string length is not a multiple of 8."""


# Sample grid --------------------------------------------------------------

class ZeroSamplesError(DuostegoError):
    """A grid cannot be laid over zero samples."""


class OutOfRangeError(DuostegoError):
    """Sample index or coordinate outside the grid."""


class CapacityExceededError(DuostegoError):
    """Payload needs more embedding slots than the carrier has."""


# Lexicon ------------------------------------------------------------------

class LexiconError(DuostegoError):
    """Base class for lexicon loading and lookup failures."""


class LexiconParseError(LexiconError):
    """Malformed lexicon line (bad field count, digit, POS tag, or word)."""


class DuplicateWordError(LexiconError):
    """A word appears in two different digit categories."""

    def __init__(self, word, first_category, second_category):
        self.word = word
        self.first_category = first_category
        self.second_category = second_category
        super().__init__(
            f"word {word!r} appears in category {first_category} "
            f"and category {second_category}; categories must be disjoint"
        )


class IncompleteCategoryError(LexiconError):
    """Some (digit, part-of-speech) cell has no words."""


class UnknownWordError(LexiconError):
    """A token does not belong to any category."""

    def __init__(self, word, position=None):
        self.word = word
        self.position = position
        where = "" if position is None else f" (token {position})"
        super().__init__(f"unknown word {word!r}{where}")


# Grammar ------------------------------------------------------------------

class NoSkeletonError(DuostegoError):
    """No derivable part-of-speech sequence of the requested length."""


# Uncovering ---------------------------------------------------------------

class ExtractionError(DuostegoError):
    """Base class for failures while recovering a payload."""


class BadSentenceLengthError(ExtractionError):
    """A sentence does not have exactly 2 x digit-width tokens."""


class CoordinateOutOfRangeError(ExtractionError):
    """Decoded coordinates point outside the carrier's sample grid."""


class HeaderCorruptError(ExtractionError):
    """The recovered length header is inconsistent with the recovered bits."""
