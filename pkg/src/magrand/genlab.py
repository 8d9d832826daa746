"""Seeded MAG generators.

Bit ``k`` of the pair space is drawn from a counter-based stream: word
``k // 64`` is SplitMix64's finalizer applied to ``key + (k//64 + 1) * GOLDEN``
where ``key`` is the finalized seed.  Any bit range can be produced on its
own, and the output does not depend on how the range is split.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Mag, MagSignature
from .errors import ConfigError
from .pairs import pair_arrays

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
KINDS = ("uniform-half", "empty", "complete", "banded", "periodic")

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def stream_words(seed: int, start: int, count: int) -> np.ndarray:
    """64-bit words ``start .. start+count-1`` of the stream for ``seed``."""
    key = _mix(np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64))[0]
    ctr = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    return _mix(key + ctr * GOLDEN)


def stream_bits(seed: int, start: int, stop: int) -> np.ndarray:
    """Bits ``[start, stop)`` of the stream, least significant bit first per word."""
    if stop <= start:
        return np.zeros(0, dtype=np.uint8)
    w0, w1 = start // 64, (stop + 63) // 64
    words = stream_words(seed, w0, w1 - w0).astype("<u8")
    bits = np.unpackbits(words.view(np.uint8), bitorder="little")
    return bits[start - 64 * w0:stop - 64 * w0]


@dataclass(frozen=True)
class GeneratorSpec:
    sig: MagSignature
    kind: str = "uniform-half"
    seed: int = 0
    window: int = 1
    period: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown generator kind {self.kind!r}; choose from {KINDS}")
        if self.kind == "banded":
            if self.sig.time_aspect is None:
                raise ConfigError("banded generation needs a time aspect")
            if self.window < 0:
                raise ConfigError("band window must be >= 0")
        if self.kind == "periodic" and self.period < 1:
            raise ConfigError("period must be >= 1")


def generate(spec: GeneratorSpec) -> Mag:
    sig = spec.sig
    m = sig.n_pairs
    if spec.kind == "empty":
        return Mag.empty(sig)
    if spec.kind == "complete":
        return Mag.complete(sig)
    if spec.kind == "uniform-half":
        return Mag(sig, stream_bits(spec.seed, 0, m))
    if spec.kind == "periodic":
        pattern = stream_bits(spec.seed, 0, spec.period)
        return Mag(sig, np.resize(pattern, m))
    # banded
    t = sig.aspect_coords(sig.time_aspect)
    a, b = pair_arrays(sig.n_composite)
    eligible = np.abs(t[a] - t[b]) <= spec.window
    return Mag(sig, stream_bits(spec.seed, 0, m) & eligible.astype(np.uint8))
