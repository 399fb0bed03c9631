"""Deterministic seeded sampling for every distribution the pipelines use.

Reproducibility contract
------------------------
Every random draw in the toolkit comes from a generator derived from a
``SeedPath``: a master seed plus an ordered tuple of non-negative replicate
indices.  The derived stream is a pure function of ``(master_seed, path)``,
and distinct paths give statistically independent streams, so nested
bootstrap replicates can run serially or in parallel and still produce
bit-identical results.  Streams are backed by ``numpy.random.Generator``
(PCG64) keyed through ``SeedSequence`` spawn keys.

Conventions recorded in output metadata: Gamma is parameterized as
(shape, scale); violation distributions take their parameters from the
rate matrix entry-wise (gamma shape=rate/scale=1, normal mean=var=rate,
zip keeps rate unscaled), so each matches the rate in mean where possible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .matrix import CountMatrix, RateMatrix

VIOLATION_KINDS = ("poisson", "gamma", "normal", "zip")


@dataclass(frozen=True)
class SeedPath:
    """Address of one random stream: master seed plus replicate indices."""

    master_seed: int
    path: tuple[int, ...] = ()

    def __post_init__(self):
        if not 0 <= int(self.master_seed) < 2**64:
            raise DomainError("master_seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "path", tuple(int(p) for p in self.path))
        if any(p < 0 for p in self.path):
            raise DomainError("path indices must be non-negative")

    def child(self, *indices: int) -> "SeedPath":
        return SeedPath(self.master_seed, self.path + tuple(indices))


def derive_stream(seed_path: SeedPath) -> np.random.Generator:
    """Deterministic generator for a seed path; same path, same sequence."""
    seq = np.random.SeedSequence(seed_path.master_seed, spawn_key=seed_path.path)
    return np.random.Generator(np.random.PCG64(seq))


@dataclass(frozen=True)
class ViolationSpec:
    """Which distribution generates X from a rate matrix in the violation suite."""

    kind: str
    zip_zero_prob: float | None = None

    def __post_init__(self):
        if self.kind not in VIOLATION_KINDS:
            raise DomainError(f"unknown violation kind {self.kind!r}")
        if self.kind == "zip":
            if self.zip_zero_prob is None or not 0.0 <= self.zip_zero_prob <= 1.0:
                raise DomainError("zip requires zip_zero_prob in [0, 1]")
        elif self.zip_zero_prob is not None:
            raise DomainError("zip_zero_prob only applies to kind='zip'")

    @property
    def label(self) -> str:
        return f"zip(p={self.zip_zero_prob:g})" if self.kind == "zip" else self.kind


def _rate_values(rates) -> np.ndarray:
    arr = np.asarray(getattr(rates, "values", rates), dtype=np.float64)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError("rates must be finite and non-negative")
    return arr


def sample_poisson_matrix(rates: RateMatrix, stream: np.random.Generator) -> CountMatrix:
    """Entry-wise independent Poisson draws; integer counts stored as reals."""
    lam = _rate_values(rates)
    return CountMatrix(stream.poisson(lam).astype(np.float64))


def sample_gamma(shape: float, scale: float, stream: np.random.Generator, size=None):
    """Gamma(shape, scale) draw(s): mean shape*scale, variance shape*scale^2."""
    if not (shape > 0 and scale > 0):
        raise DomainError("gamma shape and scale must be positive")
    return stream.gamma(shape, scale, size=size)


def sample_violation_matrix(
    rates: RateMatrix, spec: ViolationSpec, stream: np.random.Generator
) -> CountMatrix:
    """Draw X entry-wise from the violation distribution parameterized by the rates.

    poisson: Pois(rate); gamma: Gamma(shape=rate, scale=1); normal:
    Normal(mean=rate, var=rate) with negative draws replaced by zero;
    zip: 0 with probability p, else Pois(rate).  For zip the zero mask is
    drawn before the Poisson matrix.  All outputs are non-negative.
    """
    lam = _rate_values(rates)
    if spec.kind == "poisson":
        out = stream.poisson(lam).astype(np.float64)
    elif spec.kind == "gamma":
        # Generator.gamma(0, 1) is the correct degenerate limit (exactly 0).
        out = stream.gamma(lam, 1.0)
    elif spec.kind == "normal":
        out = np.maximum(stream.normal(lam, np.sqrt(lam)), 0.0)
    else:
        zero = stream.random(lam.shape) < spec.zip_zero_prob
        out = np.where(zero, 0.0, stream.poisson(lam).astype(np.float64))
    return CountMatrix(out)
