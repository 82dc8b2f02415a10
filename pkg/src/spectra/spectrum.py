"""Discrete magnitude spectra and their element-wise algebra.

A spectrum here is an ordered set of (frequency, magnitude) lines on a
uniform grid: line ``i`` sits at ``i * resolution``. Two spectra with the
same resolution and the same line count are *congruent*; their lines pair
up index by index, which makes element-wise arithmetic meaningful:

* :func:`product` multiplies correspondent lines, so a frequency comes out
  emphasized only when it is significant in every input;
* :func:`ratio` divides correspondent lines, so a frequency comes out
  emphasized when it is significant in the numerator and insignificant in
  the denominator;
* :func:`group_contrast` combines both, emphasizing frequencies present in
  one group of spectra and absent in another.

All types are immutable values and all operations are pure functions, so
everything here is safe to share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    AllNearZeroError,
    DivisionByNearZeroError,
    EmptyInputError,
    EmptyListError,
    MagnitudeBelowFloorError,
    NegativeMagnitudeError,
    NonPositiveResolutionError,
    NotCongruentError,
    ValidationError,
)

#: Relative tolerance on the resolution when deciding congruence.
CONGRUENCE_RTOL = 1e-9

#: Default magnitude floor below which inversion refuses to operate.
DEFAULT_INVERSION_FLOOR = 1e-12

#: Denominator floor for plain (unconditioned) division.
PLAIN_DIVISION_FLOOR = 1e-12

#: Default threshold for conditioned division.
DEFAULT_EPSILON = 1e-6


@dataclass(frozen=True)
class SpectralLine:
    """One (frequency, magnitude) doublet."""

    frequency: float
    magnitude: float

    def __post_init__(self):
        if not (np.isfinite(self.frequency) and self.frequency >= 0.0):
            raise ValidationError(f"line frequency must be a finite non-negative real, got {self.frequency!r}")
        if not (np.isfinite(self.magnitude) and self.magnitude >= 0.0):
            raise ValidationError(f"line magnitude must be a finite non-negative real, got {self.magnitude!r}")


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Magnitudes on the uniform frequency grid ``i * resolution``, i = 0..N.

    ``magnitudes`` is stored as a read-only float64 array; the grid
    frequencies are implied by ``resolution`` and never stored, so the
    spacing invariant holds exactly by construction. The degenerate
    single-line case (the spectrum of a constant signal) is a valid
    spectrum and needs no special casing anywhere in the algebra.
    """

    magnitudes: np.ndarray
    resolution: float

    def __post_init__(self):
        res = self.resolution
        try:
            res = float(res)
        except (TypeError, ValueError):
            raise NonPositiveResolutionError(f"resolution must be a real number, got {self.resolution!r}") from None
        if not (np.isfinite(res) and res > 0.0):
            raise NonPositiveResolutionError(f"resolution must be finite and > 0, got {res!r}")

        values = np.array(self.magnitudes, dtype=np.float64, copy=True)
        if values.ndim != 1:
            raise ValidationError(f"magnitudes must be one-dimensional, got shape {values.shape}")
        if values.size == 0:
            raise EmptyInputError("a spectrum needs at least one magnitude")
        bad = np.flatnonzero(~(np.isfinite(values) & (values >= 0.0)))
        if bad.size:
            i = int(bad[0])
            raise NegativeMagnitudeError(i, float(self.magnitudes[i]))

        values.flags.writeable = False
        object.__setattr__(self, "magnitudes", values)
        object.__setattr__(self, "resolution", res)

    def __len__(self) -> int:
        return int(self.magnitudes.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.resolution == other.resolution and np.array_equal(self.magnitudes, other.magnitudes)

    __hash__ = None  # mutable-free but array-backed; not meant for dict keys

    @property
    def frequencies(self) -> np.ndarray:
        """Grid frequencies ``i * resolution`` as a fresh array."""
        return np.arange(len(self), dtype=np.float64) * self.resolution

    def line(self, i: int) -> SpectralLine:
        return SpectralLine(i * self.resolution, float(self.magnitudes[i]))

    @property
    def lines(self) -> tuple[SpectralLine, ...]:
        return tuple(self.line(i) for i in range(len(self)))

    def __iter__(self) -> Iterator[SpectralLine]:
        return iter(self.lines)

    def __repr__(self) -> str:
        return f"Spectrum({len(self)} lines, resolution={self.resolution!r} Hz)"


@dataclass(frozen=True)
class DivisionPolicy:
    """How :func:`ratio` treats denominators near zero.

    ``plain`` divides unconditionally and refuses denominators below
    ``PLAIN_DIVISION_FLOOR``. ``conditioned`` applies a two-sided rule at
    each index: when both operands are below ``epsilon`` the quotient is
    forced to exactly 0.0 (noise over noise carries no information), and
    when only the denominator is below ``epsilon`` the division uses
    ``epsilon`` instead (a genuine contrast, kept finite). Everywhere else
    the two modes agree exactly.
    """

    mode: str = "conditioned"
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if self.mode not in ("plain", "conditioned"):
            raise ValidationError(f"division mode must be 'plain' or 'conditioned', got {self.mode!r}")
        if not (np.isfinite(self.epsilon) and self.epsilon > 0.0):
            raise ValidationError(f"epsilon must be finite and > 0, got {self.epsilon!r}")

    @classmethod
    def plain(cls) -> "DivisionPolicy":
        return cls(mode="plain")

    @classmethod
    def conditioned(cls, epsilon: float = DEFAULT_EPSILON) -> "DivisionPolicy":
        return cls(mode="conditioned", epsilon=epsilon)


def make_spectrum(values: Sequence[float] | np.ndarray, resolution: float) -> Spectrum:
    """Build a spectrum from non-negative magnitudes on a uniform grid.

    Line ``i`` of the result sits at frequency ``i * resolution``.

    Raises
    ------
    EmptyInputError
        If ``values`` is empty.
    NonPositiveResolutionError
        If ``resolution`` is not a finite positive number.
    NegativeMagnitudeError
        If any value is negative or not finite (the index is reported).
    """
    return Spectrum(np.asarray(values), resolution)


def is_congruent(a: Spectrum, b: Spectrum) -> bool:
    """True iff ``a`` and ``b`` share resolution and line count.

    Resolutions are compared with relative tolerance ``CONGRUENCE_RTOL``;
    exact equality of floats would be useless after any arithmetic. Total
    function: never raises.
    """
    if len(a) != len(b):
        return False
    return abs(a.resolution - b.resolution) / a.resolution <= CONGRUENCE_RTOL


def _require_pairwise_congruent(spectra: Sequence[Spectrum], labels: Sequence[object] | None = None) -> None:
    n = len(spectra)
    for i in range(n):
        for j in range(i + 1, n):
            if not is_congruent(spectra[i], spectra[j]):
                a, b = spectra[i], spectra[j]
                if len(a) != len(b):
                    detail = f"{len(a)} vs {len(b)} lines"
                else:
                    detail = f"resolution {a.resolution!r} vs {b.resolution!r}"
                li = labels[i] if labels else i
                lj = labels[j] if labels else j
                raise NotCongruentError(li, lj, detail)


def invert(s: Spectrum, floor: float = DEFAULT_INVERSION_FLOOR) -> Spectrum:
    """Reciprocal spectrum: each magnitude replaced by ``1 / magnitude``.

    Inversion swaps the roles of significant and insignificant lines,
    which is what lets a division suppress one group of spectra. It is
    only defined when no magnitude is (near) zero, so any magnitude below
    ``floor`` is a hard error rather than something to clamp silently.

    Raises
    ------
    MagnitudeBelowFloorError
        If some magnitude is below ``floor`` (index and value reported).
    """
    if not (np.isfinite(floor) and floor > 0.0):
        raise ValidationError(f"floor must be finite and > 0, got {floor!r}")
    low = np.flatnonzero(s.magnitudes < floor)
    if low.size:
        i = int(low[0])
        raise MagnitudeBelowFloorError(i, float(s.magnitudes[i]), floor)
    return Spectrum(1.0 / s.magnitudes, s.resolution)


def product(spectra: Sequence[Spectrum]) -> Spectrum:
    """Element-wise product of congruent spectra.

    The magnitude at each index is the product of the inputs' magnitudes
    at that index, folded left to right in list order so results are
    bit-stable across runs. A line survives as large only if it is large
    in every input, which is exactly what emphasizes the frequencies
    common to all of them. A single-element list returns a copy.

    Raises
    ------
    EmptyListError
        If ``spectra`` is empty.
    NotCongruentError
        If some pair of inputs disagrees in resolution or line count
        (the first offending pair, in list order, is reported).
    """
    spectra = list(spectra)
    if not spectra:
        raise EmptyListError("product needs at least one spectrum")
    _require_pairwise_congruent(spectra)
    acc = spectra[0].magnitudes.copy()
    for s in spectra[1:]:
        acc = acc * s.magnitudes
    return Spectrum(acc, spectra[0].resolution)


def ratio(numerator: Spectrum, denominator: Spectrum, policy: DivisionPolicy) -> Spectrum:
    """Element-wise quotient of congruent spectra under a division policy.

    The quotient is large exactly where the numerator is significant and
    the denominator is not, emphasizing the frequencies the two operands
    do not share. Transform roundoff leaves the nominally-empty lines of
    real spectra at tiny non-zero values, and dividing one such residue by
    another (say ``1e-6 / 1e-9``) produces large spurious lines; the
    conditioned mode zeroes those index pairs and clamps
    denominator-only-small indices to ``policy.epsilon``. See
    :class:`DivisionPolicy`.

    Raises
    ------
    NotCongruentError
        If the operands disagree in resolution or line count.
    DivisionByNearZeroError
        In plain mode, if some denominator magnitude is below
        ``PLAIN_DIVISION_FLOOR`` (index reported).
    """
    if not is_congruent(numerator, denominator):
        if len(numerator) != len(denominator):
            detail = f"{len(numerator)} vs {len(denominator)} lines"
        else:
            detail = f"resolution {numerator.resolution!r} vs {denominator.resolution!r}"
        raise NotCongruentError("numerator", "denominator", detail)

    num = numerator.magnitudes
    den = denominator.magnitudes
    if policy.mode == "plain":
        low = np.flatnonzero(den < PLAIN_DIVISION_FLOOR)
        if low.size:
            raise DivisionByNearZeroError(int(low[0]))
        out = num / den
    else:
        eps = policy.epsilon
        out = num / np.where(den < eps, eps, den)
        out[(num < eps) & (den < eps)] = 0.0
    return Spectrum(out, numerator.resolution)


def group_contrast(
    emphasize: Sequence[Spectrum],
    suppress: Sequence[Spectrum],
    policy: DivisionPolicy,
) -> Spectrum:
    """Emphasize frequencies common to one group and absent from another.

    Exactly ``ratio(product(emphasize), product(suppress), policy)``, with
    the same left-to-right evaluation order, so composing the two steps by
    hand gives a bit-identical result.

    Raises
    ------
    EmptyListError
        If either group is empty.
    NotCongruentError
        If any involved pair disagrees in resolution or line count.
    """
    return ratio(product(emphasize), product(suppress), policy)


def normalize_max(s: Spectrum) -> Spectrum:
    """Scale magnitudes so the largest becomes exactly 1.0.

    Useful to compare channels acquired with different gains; none of the
    detection pipelines applies it implicitly, since the algebra operates
    on raw magnitudes. Positive scaling preserves the argmax index.

    Raises
    ------
    AllNearZeroError
        If the maximum magnitude is below 1e-12.
    """
    peak = float(s.magnitudes.max())
    if peak < 1e-12:
        raise AllNearZeroError(f"maximum magnitude {peak!r} is too close to zero to normalize")
    return Spectrum(s.magnitudes / peak, s.resolution)
