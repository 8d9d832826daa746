"""Compression-based lower bounds on randomness deficiency.

A compressor's output length upper-bounds the plain complexity of the
characteristic string up to an additive constant fixed by the compressor
model, so ``raw_len - compressed_len`` is a lower bound on the smallest
deficiency for which the graph is still deficiency-C-random.  A certificate
can only refute randomness; passing the log test never proves it.

The number of composite vertices is read from the signature and never
stored in the compressed payload, which is how the conditioning on ``N``
is realized.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import log2

from .compression import Compressor, ReferenceCompressor
from .core import Mag
from .errors import ConfigError


@dataclass(frozen=True)
class DeficiencyCertificate:
    raw_len: int
    compressed_len: int
    deficiency_lb: int
    compressor_id: str
    n_composite: int
    # compressor output bounds C(x|N) only up to a fixed additive constant
    caveat: str = "modulo compressor-model constant"

    def __post_init__(self):
        if self.raw_len != self.n_composite * (self.n_composite - 1) // 2:
            raise ValueError("raw_len must equal C(n_composite, 2)")
        if self.deficiency_lb != max(0, self.raw_len - self.compressed_len):
            raise ValueError("deficiency_lb must equal max(0, raw_len - compressed_len)")

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class RandomnessThreshold:
    """Deficiency budget ``c * log2(N)``."""

    c: float = 3.0

    def __post_init__(self):
        if not self.c > 0:
            raise ConfigError(f"threshold coefficient must be positive, got {self.c}")

    def budget(self, n_composite: int) -> float:
        return self.c * log2(n_composite) if n_composite > 1 else 0.0


def certificate_from_lengths(raw_len: int, compressed_len: int, n_composite: int, compressor_id: str) -> DeficiencyCertificate:
    return DeficiencyCertificate(
        raw_len=raw_len,
        compressed_len=compressed_len,
        deficiency_lb=max(0, raw_len - compressed_len),
        compressor_id=compressor_id,
        n_composite=n_composite,
    )


def deficiency_certificate(g: Mag, compressor: Compressor | None = None) -> DeficiencyCertificate:
    compressor = compressor or ReferenceCompressor()
    return certificate_from_lengths(
        g.signature.n_pairs,
        compressor.compressed_length(g.bits),
        g.n_composite,
        compressor.compressor_id,
    )


def passes_log_randomness_test(cert: DeficiencyCertificate, thr: RandomnessThreshold) -> bool:
    return cert.deficiency_lb <= thr.budget(cert.n_composite)
