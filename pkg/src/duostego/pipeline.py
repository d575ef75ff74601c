"""End-to-end covering and uncovering, capacity, and distortion reports.

Covering produces two artifacts that only work together: the stego
audio (payload chunks in the three low bits of randomly selected
samples) and a text of generated sentences (each sentence spells the
grid coordinates of one selected sample, one digit per word, in
embedding order). Uncovering needs both artifacts and the shared
lexicon, but no seed: the sample locations travel in the text.
"""

from __future__ import annotations

import math
import secrets
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import payload_codec, sample_grid
from .errors import (
    BadSentenceLengthError,
    CapacityExceededError,
    HeaderCorruptError,
    LengthMismatchError,
)
from .grammar import DEFAULT_GRAMMAR, decode_sentence
from .lexicon import Lexicon
from .payload_codec import HEADER_BITS
from .rng import SplitMix64
from .wav_codec import AudioClip

# Keeps the sentence-seed stream distinct from the sample-selection
# stream, which is seeded with the user seed directly.
_TEXT_STREAM_SALT = 0x74657874_73746567


@dataclass(frozen=True)
class StegoBundle:
    """The two intermediates produced by cover(), plus the seed that made them."""

    stego_audio: AudioClip
    sentences: tuple[tuple[str, ...], ...]
    seed_used: int


@dataclass(frozen=True)
class DistortionReport:
    """How far a stego clip strayed from its carrier."""

    samples_changed: int
    max_abs_delta: int
    mean_abs_delta: float
    snr_db: float


def capacity_bits(clip: AudioClip) -> int:
    """Raw embedding capacity: 3 bits per 16-bit sample."""
    return 3 * clip.sample_count


def capacity_bytes(clip: AudioClip) -> int:
    """Largest payload that fits after the 32-bit length header."""
    return max(0, (capacity_bits(clip) - HEADER_BITS) // 8)


def sentence_count_for(payload_length: int) -> int:
    """Sentences (= chunks = selected samples) needed for a payload of given byte length."""
    return math.ceil((8 * payload_length + HEADER_BITS) / 3)


def cover(
    carrier: AudioClip,
    payload: bytes,
    lexicon: Lexicon,
    seed: int | None = None,
) -> StegoBundle:
    """Hide `payload` in `carrier`, returning stego audio plus location text.

    The seed (random if omitted) drives both sample selection and
    sentence wording; rerunning with bundle.seed_used reproduces the
    bundle exactly. Sample selection is seeded with the seed directly,
    so select_samples(n, m, seed) recomputes the embedding positions.
    """
    if seed is None:
        seed = secrets.randbits(64)
    n = carrier.sample_count
    needed_bits = 8 * len(payload) + HEADER_BITS
    if needed_bits > capacity_bits(carrier):
        raise CapacityExceededError(
            f"payload of {len(payload)} bytes needs {needed_bits} bits but the "
            f"carrier holds {capacity_bits(carrier)} ({capacity_bytes(carrier)} payload bytes)"
        )

    bits = payload_codec.frame(payload_codec.bytes_to_bits(payload))
    chunks = payload_codec.chunk(bits)
    order = sample_grid.select_samples(n, len(chunks), seed)
    indices = np.fromiter(order, dtype=np.int64, count=len(order))

    stego_samples = sample_grid.embed_chunks(carrier.samples, indices, chunks)
    stego = carrier.with_samples(stego_samples)

    geom = sample_grid.geometry(n)
    seeder = SplitMix64(seed ^ _TEXT_STREAM_SALT)
    sentences = tuple(
        tuple(DEFAULT_GRAMMAR.generate_sentence(lexicon, geom.digits_for(i), seeder.next64()))
        for i in order
    )
    return StegoBundle(stego, sentences, seed)


def uncover(stego: AudioClip, sentences: Sequence[Sequence[str]], lexicon: Lexicon) -> bytes:
    """Recover the payload from the stego audio and the location text.

    Sentence order matters: it is the chunk order. No seed is needed.
    """
    if stego.sample_count == 0:
        raise HeaderCorruptError("stego audio has no samples")
    geom = sample_grid.geometry(stego.sample_count)
    expected_len = 2 * geom.digit_width

    positions = []
    for line_no, tokens in enumerate(sentences):
        tokens = list(tokens)
        if len(tokens) != expected_len:
            raise BadSentenceLengthError(
                f"sentence {line_no}: {len(tokens)} words, expected {expected_len} "
                f"for a carrier of {stego.sample_count} samples"
            )
        digits = decode_sentence(lexicon, tokens)
        positions.append(geom.index_from_digits(digits))

    m = len(positions)
    total_bits = 3 * m
    if total_bits < HEADER_BITS:
        raise HeaderCorruptError(
            f"{m} sentences supply only {total_bits} bits, "
            f"fewer than the {HEADER_BITS}-bit length header"
        )
    indices = np.fromiter(positions, dtype=np.int64, count=m)
    chunks = sample_grid.extract_chunks(stego.samples, indices)
    bits = payload_codec.unchunk(chunks, total_bits)
    payload_bits = payload_codec.unframe(bits)
    slack = total_bits - HEADER_BITS - payload_bits.size
    if not 0 <= slack < 3:
        raise HeaderCorruptError(
            f"{m} sentences are inconsistent with a declared payload of "
            f"{payload_bits.size} bits"
        )
    if payload_bits.size % 8:
        raise HeaderCorruptError(
            f"declared payload of {payload_bits.size} bits is not a whole number of bytes"
        )
    return payload_codec.bits_to_bytes(payload_bits)


def distortion_report(original: AudioClip, stego: AudioClip) -> DistortionReport:
    """Per-sample damage statistics plus signal-to-noise ratio in dB.

    Deltas are over the unsigned 16-bit patterns; the SNR interprets
    samples as signed amplitudes. SNR is +inf for identical clips.
    """
    if original.sample_count != stego.sample_count:
        raise LengthMismatchError(
            f"clips have {original.sample_count} and {stego.sample_count} samples"
        )
    a = original.samples.astype(np.int64)
    b = stego.samples.astype(np.int64)
    delta = np.abs(a - b)
    changed = int(np.count_nonzero(delta))
    max_delta = int(delta.max()) if delta.size else 0
    mean_delta = float(delta.mean()) if delta.size else 0.0

    signal = original.samples.view(np.int16).astype(np.int64)
    noise = signal - stego.samples.view(np.int16).astype(np.int64)
    noise_power = int(np.sum(noise * noise))
    if noise_power == 0:
        snr = math.inf
    else:
        signal_power = int(np.sum(signal * signal))
        snr = 10.0 * math.log10(signal_power / noise_power) if signal_power else -math.inf
    return DistortionReport(changed, max_delta, mean_delta, snr)
