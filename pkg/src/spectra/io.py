"""CSV formats for sample series, spectra, and detection reports.

Samples CSV
    ``#``-prefixed ``key=value`` comment headers, then an optional
    ``index,value`` column-header row, then one ``index,value`` row per
    sample with consecutive indices from 0. Recognized header keys:
    ``sample_rate`` (required, Hz), ``sample_count`` (optional, checked
    against the row count), ``drawn_lines`` (optional), ``axis``
    (optional, ``paper`` or ``standard``). Unrecognized comments are
    ignored, so files can carry free-form annotations.

Spectrum CSV
    Header ``bin,frequency_hz,magnitude``, one row per line, frequencies
    and magnitudes printed with 9 significant digits, LF line endings,
    ``.`` decimal separator. Reading back reproduces magnitudes within
    1e-8 relative.

Detections CSV
    Header ``rank,bin,frequency_hz,magnitude``, one row per detection.

All writes are atomic: content goes to a temporary file that is then
renamed over the target.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Sequence

import numpy as np

from .detect import DetectedFrequency
from .dsp import AXIS_CONVENTIONS, SampleSeries, SamplingConfig
from .errors import (
    LengthMismatchError,
    MalformedCsvError,
    MissingHeaderError,
    TooFewSamplesError,
)
from .spectrum import Spectrum, make_spectrum

SPECTRUM_CSV_HEADER = "bin,frequency_hz,magnitude"
DETECTIONS_CSV_HEADER = "rank,bin,frequency_hz,magnitude"
SAMPLES_CSV_HEADER = "index,value"

_SAMPLE_META_KEYS = ("sample_rate", "sample_count", "drawn_lines", "axis")


def _atomic_write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def read_samples_csv(path: str | Path) -> SampleSeries:
    """Read a samples CSV; the sampling config comes from its headers.

    Raises
    ------
    MissingHeaderError
        If no ``# sample_rate=`` header is present.
    MalformedCsvError
        For any unparseable header or row (the line number is reported).
    LengthMismatchError
        If a declared ``sample_count`` disagrees with the row count.
    TooFewSamplesError
        If the file holds fewer than 2 samples.
    """
    path = Path(path)
    meta: dict[str, tuple[str, int]] = {}
    values: list[float] = []
    with open(path, encoding="utf-8") as fh:
        for line_number, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" not in body:
                    continue  # free-form comment
                key, _, value = body.partition("=")
                key = key.strip()
                if key in _SAMPLE_META_KEYS:
                    meta[key] = (value.strip(), line_number)
                continue
            if line.lower() == SAMPLES_CSV_HEADER:
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise MalformedCsvError(path, line_number, f"expected 'index,value', got {line!r}")
            try:
                index = int(parts[0])
            except ValueError:
                raise MalformedCsvError(path, line_number, f"row index {parts[0]!r} is not an integer") from None
            if index != len(values):
                raise MalformedCsvError(path, line_number, f"row index {index} out of order, expected {len(values)}")
            try:
                value = float(parts[1])
            except ValueError:
                raise MalformedCsvError(path, line_number, f"sample value {parts[1]!r} is not a number") from None
            if not np.isfinite(value):
                raise MalformedCsvError(path, line_number, f"sample value {parts[1]!r} is not finite")
            values.append(value)

    if "sample_rate" not in meta:
        raise MissingHeaderError(f"{path}: missing '# sample_rate=<hz>' header")
    raw_rate, rate_line = meta["sample_rate"]
    try:
        sample_rate = float(raw_rate)
    except ValueError:
        raise MalformedCsvError(path, rate_line, f"sample_rate {raw_rate!r} is not a number") from None

    if "sample_count" in meta:
        raw_count, count_line = meta["sample_count"]
        try:
            declared = int(raw_count)
        except ValueError:
            raise MalformedCsvError(path, count_line, f"sample_count {raw_count!r} is not an integer") from None
        if declared != len(values):
            raise LengthMismatchError(declared, len(values), f"{path}: declared sample_count vs data rows")
    if len(values) < 2:
        raise TooFewSamplesError(f"{path}: need at least 2 sample rows, got {len(values)}")

    drawn_lines = None
    if "drawn_lines" in meta:
        raw_drawn, drawn_line = meta["drawn_lines"]
        try:
            drawn_lines = int(raw_drawn)
        except ValueError:
            raise MalformedCsvError(path, drawn_line, f"drawn_lines {raw_drawn!r} is not an integer") from None
    axis = meta.get("axis", (AXIS_CONVENTIONS[0], 0))[0]
    cfg = SamplingConfig(sample_rate, len(values), drawn_lines, axis)
    return SampleSeries(np.asarray(values), cfg)


def samples_csv_text(series: SampleSeries) -> str:
    cfg = series.config
    rows = [
        f"# sample_rate={cfg.sample_rate:.17g}",
        f"# sample_count={cfg.sample_count}",
        f"# drawn_lines={cfg.drawn_lines}",
        f"# axis={cfg.axis_convention}",
        SAMPLES_CSV_HEADER,
    ]
    rows.extend(f"{i},{v:.17g}" for i, v in enumerate(series.values))
    return "\n".join(rows) + "\n"


def write_samples_csv(series: SampleSeries, path: str | Path) -> None:
    """Write a samples CSV that :func:`read_samples_csv` reads back exactly."""
    _atomic_write_text(path, samples_csv_text(series))


def spectrum_csv_text(s: Spectrum) -> str:
    rows = [SPECTRUM_CSV_HEADER]
    rows.extend(
        f"{i},{i * s.resolution:.9g},{m:.9g}" for i, m in enumerate(s.magnitudes)
    )
    return "\n".join(rows) + "\n"


def write_spectrum_csv(s: Spectrum, path: str | Path) -> None:
    """Write a spectrum CSV (see module docstring for the format)."""
    _atomic_write_text(path, spectrum_csv_text(s))


def read_spectrum_csv(path: str | Path) -> Spectrum:
    """Read a spectrum CSV written by :func:`write_spectrum_csv`.

    The grid is rebuilt from the printed line spacing, so magnitudes come
    back within the printing precision (1e-8 relative) and the grid
    invariants hold exactly. A single-line file carries no spacing
    information; its resolution defaults to 1.0 Hz.
    """
    path = Path(path)
    magnitudes: list[float] = []
    frequencies: list[float] = []
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].strip() != SPECTRUM_CSV_HEADER:
        raise MissingHeaderError(f"{path}: expected header {SPECTRUM_CSV_HEADER!r}")
    for line_number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise MalformedCsvError(path, line_number, f"expected 'bin,frequency_hz,magnitude', got {line!r}")
        try:
            b = int(parts[0])
            freq = float(parts[1])
            mag = float(parts[2])
        except ValueError:
            raise MalformedCsvError(path, line_number, f"unparseable row {line!r}") from None
        if b != len(magnitudes):
            raise MalformedCsvError(path, line_number, f"bin {b} out of order, expected {len(magnitudes)}")
        frequencies.append(freq)
        magnitudes.append(mag)
    if not magnitudes:
        raise MalformedCsvError(path, len(lines), "no data rows")
    resolution = frequencies[1] if len(frequencies) >= 2 else 1.0
    return make_spectrum(magnitudes, resolution)


def detections_csv_text(detections: Sequence[DetectedFrequency]) -> str:
    rows = [DETECTIONS_CSV_HEADER]
    rows.extend(
        f"{d.rank},{d.bin_index},{d.frequency:.9g},{d.magnitude:.9g}" for d in detections
    )
    return "\n".join(rows) + "\n"


def write_detections_csv(detections: Sequence[DetectedFrequency], path: str | Path) -> None:
    """Write a ranked detection report CSV."""
    _atomic_write_text(path, detections_csv_text(detections))
