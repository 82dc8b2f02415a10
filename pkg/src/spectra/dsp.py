"""Signal synthesis, sampling, and one-sided discrete magnitude spectra.

Two frequency-axis conventions are supported, because tools disagree on
how to label the grid of an ``N``-point transform sampled at rate ``r``:

* ``"paper"``: line spacing ``r / (N - 1)``, i.e. the reciprocal of the
  total sampling time ``t_s = (N - 1) / r``. Spreadsheet-style analyses
  commonly label their spectra this way.
* ``"standard"``: line spacing ``r / N``, the DFT bin spacing.

The convention only relabels the axis: magnitudes are identical under
both.

Magnitudes are scaled ``1/N`` at the zero-frequency line and ``2/N``
elsewhere, so a unit-amplitude sinusoid sitting exactly on a bin reads
1.0 and a constant signal reads its own value at line 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyInputError, LengthMismatchError, TooFewSamplesError, ValidationError
from .spectrum import Spectrum

AXIS_PAPER = "paper"
AXIS_STANDARD = "standard"
AXIS_CONVENTIONS = (AXIS_PAPER, AXIS_STANDARD)


@dataclass(frozen=True)
class SamplingConfig:
    """Acquisition geometry: rate, sample count, drawn lines, axis labels.

    ``drawn_lines`` is how many one-sided spectral lines to keep, at most
    ``sample_count // 2 + 1``; ``None`` keeps them all.
    """

    sample_rate: float
    sample_count: int
    drawn_lines: int | None = None
    axis_convention: str = AXIS_PAPER

    def __post_init__(self):
        if not (np.isfinite(self.sample_rate) and self.sample_rate > 0.0):
            raise ValidationError(f"sample_rate must be finite and > 0, got {self.sample_rate!r}")
        if int(self.sample_count) != self.sample_count:
            raise ValidationError(f"sample_count must be an integer, got {self.sample_count!r}")
        object.__setattr__(self, "sample_count", int(self.sample_count))
        if self.sample_count < 2:
            raise TooFewSamplesError(f"need at least 2 samples, got {self.sample_count}")
        limit = self.sample_count // 2 + 1
        drawn = self.drawn_lines
        if drawn is None:
            drawn = limit
        if int(drawn) != drawn or not (1 <= int(drawn) <= limit):
            raise ValidationError(
                f"drawn_lines must be an integer in [1, {limit}] for {self.sample_count} samples, got {self.drawn_lines!r}"
            )
        object.__setattr__(self, "drawn_lines", int(drawn))
        if self.axis_convention not in AXIS_CONVENTIONS:
            raise ValidationError(
                f"axis_convention must be one of {AXIS_CONVENTIONS}, got {self.axis_convention!r}"
            )

    @property
    def sampling_time(self) -> float:
        """Duration covered by the samples, ``(sample_count - 1) / sample_rate``."""
        return (self.sample_count - 1) / self.sample_rate

    @property
    def resolution(self) -> float:
        """Spectral line spacing implied by the axis convention."""
        if self.axis_convention == AXIS_PAPER:
            return self.sample_rate / (self.sample_count - 1)
        return self.sample_rate / self.sample_count


@dataclass(frozen=True)
class SignalTerm:
    """One sinusoidal term: ``sign * amplitude * shape(2*pi*frequency*t)``."""

    shape: str  # "sin" or "cos"
    sign: int = 1
    frequency: float = 0.0
    amplitude: float = 1.0

    def __post_init__(self):
        if self.shape not in ("sin", "cos"):
            raise ValidationError(f"term shape must be 'sin' or 'cos', got {self.shape!r}")
        if self.sign not in (1, -1):
            raise ValidationError(f"term sign must be +1 or -1, got {self.sign!r}")
        if not (np.isfinite(self.frequency) and self.frequency >= 0.0):
            raise ValidationError(f"term frequency must be a finite non-negative real, got {self.frequency!r}")
        if not np.isfinite(self.amplitude):
            raise ValidationError(f"term amplitude must be finite, got {self.amplitude!r}")


@dataclass(frozen=True)
class SignalSpec:
    """A synthetic test signal: a sum of sinusoidal terms."""

    terms: tuple[SignalTerm, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise EmptyInputError("a signal needs at least one term")
        object.__setattr__(self, "terms", terms)


@dataclass(frozen=True, eq=False)
class SampleSeries:
    """Sampled values plus the configuration they were acquired under."""

    values: np.ndarray
    config: SamplingConfig

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.ndim != 1:
            raise ValidationError(f"sample values must be one-dimensional, got shape {values.shape}")
        if values.size != self.config.sample_count:
            raise LengthMismatchError(self.config.sample_count, int(values.size), "sample values vs sample_count")
        if not np.all(np.isfinite(values)):
            raise ValidationError("sample values must all be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SampleSeries):
            return NotImplemented
        return self.config == other.config and np.array_equal(self.values, other.values)

    __hash__ = None


def synthesize(spec: SignalSpec, cfg: SamplingConfig) -> SampleSeries:
    """Sample a sum of sinusoids: value ``n`` is taken at ``t = n / sample_rate``."""
    t = np.arange(cfg.sample_count, dtype=np.float64) / cfg.sample_rate
    total = np.zeros(cfg.sample_count, dtype=np.float64)
    for term in spec.terms:
        wave = np.sin if term.shape == "sin" else np.cos
        total += term.sign * term.amplitude * wave(2.0 * np.pi * term.frequency * t)
    return SampleSeries(total, cfg)


def _bit_reversed_indices(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros_like(idx)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


def _fft_radix2(x: np.ndarray) -> np.ndarray:
    """Iterative decimation-in-time transform; length must be a power of two."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.size
    if n & (n - 1):
        raise ValueError("radix-2 transform needs a power-of-two length")
    x = x[_bit_reversed_indices(n)]
    m = 2
    while m <= n:
        half = m // 2
        twiddle = np.exp(-2j * np.pi * np.arange(half) / m)
        blocks = x.reshape(-1, m)
        even = blocks[:, :half]
        odd = blocks[:, half:] * twiddle
        x = np.concatenate([even + odd, even - odd], axis=1).ravel()
        m *= 2
    return x


def _direct_dft(values: np.ndarray, bins: int) -> np.ndarray:
    """First ``bins`` transform values by direct summation of the definition."""
    n = values.size
    k = np.arange(bins, dtype=np.float64)[:, None]
    i = np.arange(n, dtype=np.float64)[None, :]
    return np.exp(-2j * np.pi * k * i / n) @ values


def _one_sided_magnitudes(transform: np.ndarray, sample_count: int) -> np.ndarray:
    mags = np.abs(transform) * (2.0 / sample_count)
    mags[0] = np.abs(transform[0]) / sample_count
    return mags


def magnitude_spectrum(samples: SampleSeries) -> Spectrum:
    """One-sided magnitude spectrum of a sample series.

    Power-of-two lengths go through the radix-2 fast path; anything else
    silently falls back to the direct transform (correctness over speed at
    desk scale). The first ``drawn_lines`` lines are returned, scaled as
    described in the module docstring; the resolution follows the config's
    axis convention.
    """
    cfg = samples.config
    n = len(samples)
    if n < 2:
        raise TooFewSamplesError(f"need at least 2 samples, got {n}")
    if n & (n - 1) == 0:
        transform = _fft_radix2(samples.values)[: cfg.drawn_lines]
    else:
        transform = _direct_dft(samples.values, cfg.drawn_lines)
    return Spectrum(_one_sided_magnitudes(transform, n), cfg.resolution)


def dft_oracle(samples: SampleSeries) -> Spectrum:
    """Same contract as :func:`magnitude_spectrum`, by literal summation.

    Quadratic-cost evaluation of the transform definition, independent of
    the radix-2 path; it exists as ground truth to test the fast path
    against, and works for any length.
    """
    cfg = samples.config
    n = len(samples)
    if n < 2:
        raise TooFewSamplesError(f"need at least 2 samples, got {n}")
    transform = _direct_dft(samples.values, cfg.drawn_lines)
    return Spectrum(_one_sided_magnitudes(transform, n), cfg.resolution)
