"""Ranked frequency reports and the two end-to-end detection pipelines.

The discernment criterion is ordinal: the more important a frequency is,
the greater its line's magnitude. "Emphasized" is therefore quantified as
a top-k ranking, not a magnitude threshold.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ValidationError
from .spectrum import DivisionPolicy, Spectrum, group_contrast, product


@dataclass(frozen=True)
class DetectedFrequency:
    """One ranked line: rank 1 is the largest magnitude in the report."""

    bin_index: int
    frequency: float
    magnitude: float
    rank: int


def emphasized(s: Spectrum, k: int, exclude_dc: bool = True) -> list[DetectedFrequency]:
    """Top-``k`` lines of ``s`` by magnitude, descending.

    Ties break toward the lower bin index, so reports are deterministic
    and the report for ``k`` is always a prefix of the report for
    ``k + 1``. Bin 0 carries a constant offset rather than an
    oscillation, so it is excluded by default; with it excluded, the
    single-line spectrum of a constant signal yields an empty report.
    Returns ``min(k, eligible lines)`` detections.
    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k!r}")
    start = 1 if exclude_dc else 0
    bins = np.arange(start, len(s))
    if bins.size == 0:
        return []
    mags = s.magnitudes[start:]
    order = np.lexsort((bins, -mags))  # primary: magnitude desc, secondary: bin asc
    report = []
    for rank, pos in enumerate(order[:k], start=1):
        b = int(bins[pos])
        report.append(DetectedFrequency(b, b * s.resolution, float(s.magnitudes[b]), rank))
    return report


def common_frequencies(
    spectra: Sequence[Spectrum], k: int, exclude_dc: bool = True
) -> list[DetectedFrequency]:
    """Frequencies significant in every spectrum of a group.

    Exactly ``emphasized(product(spectra), k, exclude_dc)``; errors are
    those of :func:`spectra.spectrum.product`.
    """
    return emphasized(product(spectra), k, exclude_dc)


def non_common_frequencies(
    emphasize: Sequence[Spectrum],
    suppress: Sequence[Spectrum],
    policy: DivisionPolicy,
    k: int,
    exclude_dc: bool = True,
) -> list[DetectedFrequency]:
    """Frequencies significant in one group and insignificant in another.

    Exactly ``emphasized(group_contrast(emphasize, suppress, policy), k,
    exclude_dc)``; errors are those of
    :func:`spectra.spectrum.group_contrast`.
    """
    return emphasized(group_contrast(emphasize, suppress, policy), k, exclude_dc)
