"""Read and write uncompressed 16-bit PCM RIFF/WAVE files.

Samples are exposed as raw unsigned 16-bit patterns in file interleave
order, one slot per channel sample; embedding is a bit operation, so
signedness never matters at this layer. Chunks other than ``fmt `` and
``data`` are preserved verbatim and re-emitted after the data chunk, so
a rewritten file stays as close to its source as the format allows.
The data chunk itself round-trips byte for byte.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .errors import (
    MissingChunkError,
    NotRiffError,
    TruncatedError,
    UnsupportedCodecError,
    UnsupportedDepthError,
)

WAVE_FORMAT_PCM = 1
BYTES_PER_SAMPLE = 2

_FMT_STRUCT = struct.Struct("<HHIIHH")
_U32 = struct.Struct("<I")


@dataclass(frozen=True, eq=False)
class AudioClip:
    """Decoded 16-bit PCM audio: format metadata plus raw sample patterns.

    ``samples`` is a read-only uint16 array in file interleave order.
    ``trailing_chunks`` holds any non-fmt, non-data RIFF chunks as
    (chunk id, payload) byte pairs, kept verbatim.
    """

    sample_rate: int
    channel_count: int
    samples: np.ndarray
    trailing_chunks: tuple[tuple[bytes, bytes], ...] = ()

    def __post_init__(self):
        if self.sample_rate < 1:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if self.channel_count < 1:
            raise ValueError(f"channel_count must be positive, got {self.channel_count}")
        arr = np.ascontiguousarray(self.samples, dtype=np.uint16)
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "trailing_chunks", tuple(self.trailing_chunks))

    @property
    def sample_count(self) -> int:
        """Number of 16-bit slots (every channel sample counts)."""
        return int(self.samples.size)

    def with_samples(self, samples: np.ndarray) -> "AudioClip":
        """Copy of this clip with the sample array replaced."""
        return AudioClip(self.sample_rate, self.channel_count, samples, self.trailing_chunks)

    def __eq__(self, other):
        if not isinstance(other, AudioClip):
            return NotImplemented
        return (
            self.sample_rate == other.sample_rate
            and self.channel_count == other.channel_count
            and self.trailing_chunks == other.trailing_chunks
            and np.array_equal(self.samples, other.samples)
        )

    __hash__ = None


def parse_wav(data: bytes) -> AudioClip:
    """Decode a RIFF/WAVE byte stream into an AudioClip.

    Accepts only integer PCM (format tag 1) at 16 bits per sample.
    Raises NotRiffError, UnsupportedCodecError, UnsupportedDepthError,
    TruncatedError or MissingChunkError on anything else.
    """
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise NotRiffError("missing RIFF/WAVE magic")
    (riff_size,) = _U32.unpack_from(data, 4)
    end = 8 + riff_size
    if end > len(data):
        raise TruncatedError(
            f"RIFF declares {riff_size} bytes but only {len(data) - 8} are present"
        )

    fmt_body = None
    data_body = None
    trailing = []
    pos = 12
    while pos < end:
        if pos + 8 > end:
            raise TruncatedError("dangling bytes where a chunk header was expected")
        cid = data[pos : pos + 4]
        (size,) = _U32.unpack_from(data, pos + 4)
        body_start = pos + 8
        if body_start + size > end:
            raise TruncatedError(
                f"chunk {cid!r} declares {size} bytes but only "
                f"{end - body_start} remain"
            )
        body = data[body_start : body_start + size]
        if cid == b"fmt " and fmt_body is None:
            fmt_body = body
        elif cid == b"data" and data_body is None:
            data_body = body
        else:
            trailing.append((cid, body))
        pos = body_start + size + (size & 1)  # odd chunks carry a pad byte

    if fmt_body is None:
        raise MissingChunkError("no fmt chunk")
    if data_body is None:
        raise MissingChunkError("no data chunk")
    if len(fmt_body) < _FMT_STRUCT.size:
        raise TruncatedError(f"fmt chunk is {len(fmt_body)} bytes, need at least 16")

    tag, channels, rate, _byte_rate, _block_align, bits = _FMT_STRUCT.unpack_from(fmt_body)
    if tag != WAVE_FORMAT_PCM:
        raise UnsupportedCodecError(f"format tag {tag}, only integer PCM (1) is supported")
    if bits != 16:
        raise UnsupportedDepthError(f"{bits} bits per sample, only 16 is supported")
    if channels < 1:
        raise UnsupportedCodecError("fmt chunk declares zero channels")
    if rate < 1:
        raise UnsupportedCodecError("fmt chunk declares a zero sample rate")
    if len(data_body) % BYTES_PER_SAMPLE:
        raise TruncatedError(
            f"data chunk length {len(data_body)} is odd; a 16-bit sample is cut off"
        )

    samples = np.frombuffer(data_body, dtype="<u2")
    return AudioClip(rate, channels, samples, tuple(trailing))


def write_wav(clip: AudioClip) -> bytes:
    """Serialize an AudioClip as a canonical RIFF/WAVE byte stream.

    Layout: RIFF header, 16-byte PCM fmt chunk, data chunk, then any
    preserved trailing chunks (padded to even length per RIFF rules).
    """
    payload = clip.samples.astype("<u2", copy=False).tobytes()
    block_align = clip.channel_count * BYTES_PER_SAMPLE
    fmt_body = _FMT_STRUCT.pack(
        WAVE_FORMAT_PCM,
        clip.channel_count,
        clip.sample_rate,
        clip.sample_rate * block_align,
        block_align,
        16,
    )

    chunks = [(b"fmt ", fmt_body), (b"data", payload)]
    chunks.extend(clip.trailing_chunks)

    out = bytearray()
    for cid, body in chunks:
        out += cid
        out += _U32.pack(len(body))
        out += body
        if len(body) & 1:
            out += b"\x00"
    return b"RIFF" + _U32.pack(4 + len(out)) + b"WAVE" + bytes(out)


def sample_count(clip: AudioClip) -> int:
    """Number of 16-bit sample slots in the clip."""
    return clip.sample_count
