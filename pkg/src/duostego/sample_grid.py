"""The carrier's samples as a 2D map, slot selection, and 3-LSB embedding.

The linear sample sequence is laid out row-major on a near-square grid
so every sample has (x, y) coordinates. Both sides recompute the grid
from the sample count alone, which is why the dimensions are a pure
function of N: width = ceil(sqrt(N)), height = ceil(N / width), and
both coordinate components print with one shared zero-padded digit
width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    CapacityExceededError,
    CoordinateOutOfRangeError,
    OutOfRangeError,
    ZeroSamplesError,
)
from .rng import SplitMix64

CHUNK_MASK = 0b111
KEEP_MASK = 0xFFF8  # upper thirteen bits of a 16-bit sample


@dataclass(frozen=True)
class GridGeometry:
    """Row-major grid over `total_samples` samples."""

    total_samples: int
    width: int
    height: int
    digit_width: int

    def index_to_coord(self, index: int) -> tuple[int, int]:
        """(row, column) of a sample index."""
        if not 0 <= index < self.total_samples:
            raise OutOfRangeError(f"sample index {index} outside [0, {self.total_samples})")
        return divmod(index, self.width)

    def coord_to_index(self, x: int, y: int) -> int:
        """Sample index of grid position (row x, column y)."""
        if not (0 <= x < self.height and 0 <= y < self.width):
            raise OutOfRangeError(f"coordinate ({x}, {y}) outside the {self.height}x{self.width} grid")
        index = x * self.width + y
        if index >= self.total_samples:
            raise OutOfRangeError(
                f"coordinate ({x}, {y}) lies past the last sample ({self.total_samples})"
            )
        return index

    def digits_for(self, index: int) -> list[int]:
        """The 2 x digit_width decimal digits encoding a sample's coordinates."""
        x, y = self.index_to_coord(index)
        d = self.digit_width
        return [int(c) for c in f"{x:0{d}d}{y:0{d}d}"]

    def index_from_digits(self, digits: Sequence[int]) -> int:
        """Inverse of digits_for; raises CoordinateOutOfRangeError off-grid."""
        d = self.digit_width
        if len(digits) != 2 * d:
            raise CoordinateOutOfRangeError(
                f"need {2 * d} coordinate digits, got {len(digits)}"
            )
        x = int("".join(map(str, digits[:d])))
        y = int("".join(map(str, digits[d:])))
        try:
            return self.coord_to_index(x, y)
        except OutOfRangeError as exc:
            raise CoordinateOutOfRangeError(str(exc)) from exc


def geometry(n: int) -> GridGeometry:
    """Grid over n samples; both parties derive it from the carrier alone."""
    if n < 1:
        raise ZeroSamplesError("cannot lay a grid over zero samples")
    width = math.isqrt(n - 1) + 1  # ceil(sqrt(n)) without float rounding
    height = -(-n // width)
    digit_width = max(1, len(str(max(width - 1, height - 1))))
    return GridGeometry(n, width, height, digit_width)


def select_samples(n: int, m: int, seed: int) -> list[int]:
    """m distinct sample indices out of n, in embedding order.

    Deterministic for a fixed seed (SplitMix64-driven partial
    Fisher-Yates, sparse so cost is O(m) regardless of n). The order is
    itself a uniform random m-permutation of the n indices.
    """
    if m > n:
        raise CapacityExceededError(f"cannot select {m} distinct samples from {n}")
    if m < 0:
        raise ValueError(f"selection count must be non-negative, got {m}")
    rng = SplitMix64(seed)
    displaced: dict[int, int] = {}
    out = []
    for t in range(m):
        j = t + rng.below(n - t)
        out.append(displaced.get(j, j))
        displaced[j] = displaced.get(t, t)
    return out


def embed_chunk(sample: int, chunk: int) -> int:
    """Replace the three low bits of a 16-bit sample with `chunk`."""
    if not 0 <= chunk <= CHUNK_MASK:
        raise ValueError(f"chunk {chunk} is not a 3-bit value")
    return (sample & KEEP_MASK) | chunk


def extract_chunk(sample: int) -> int:
    """The three low bits of a 16-bit sample."""
    return sample & CHUNK_MASK


def embed_chunks(samples: np.ndarray, indices: np.ndarray, chunks: np.ndarray) -> np.ndarray:
    """Vectorized embed_chunk over selected positions; returns a new array."""
    out = samples.copy()
    out[indices] = (out[indices] & KEEP_MASK) | chunks
    return out


def extract_chunks(samples: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Vectorized extract_chunk over selected positions."""
    return (samples[indices] & CHUNK_MASK).astype(np.uint8)
