"""Two-artifact audio steganography.

A payload is hidden in the three least significant bits of randomly
selected 16-bit samples of a WAV carrier; the selected positions are
published separately as grammatically valid English sentences whose
words encode the samples' grid coordinates. Recovering the payload
requires the stego audio, the sentence text, and the shared lexicon.
"""

from . import errors
from .grammar import DEFAULT_GRAMMAR, Grammar, decode_sentence
from .lexicon import Lexicon, PosClass, load_default_lexicon, load_lexicon
from .pipeline import (
    DistortionReport,
    StegoBundle,
    capacity_bits,
    capacity_bytes,
    cover,
    distortion_report,
    sentence_count_for,
    uncover,
)
from .sample_grid import (
    GridGeometry,
    embed_chunk,
    extract_chunk,
    geometry,
    select_samples,
)
from .wav_codec import AudioClip, parse_wav, sample_count, write_wav

__version__ = "0.1.0"

__all__ = [
    "AudioClip",
    "DEFAULT_GRAMMAR",
    "DistortionReport",
    "Grammar",
    "GridGeometry",
    "Lexicon",
    "PosClass",
    "StegoBundle",
    "capacity_bits",
    "capacity_bytes",
    "cover",
    "decode_sentence",
    "distortion_report",
    "embed_chunk",
    "errors",
    "extract_chunk",
    "geometry",
    "load_default_lexicon",
    "load_lexicon",
    "parse_wav",
    "sample_count",
    "select_samples",
    "sentence_count_for",
    "uncover",
    "write_wav",
    "__version__",
]
