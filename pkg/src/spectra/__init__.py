"""Algebra on congruent discrete magnitude spectra.

Multiplying correspondent lines of congruent spectra emphasizes the
frequencies significant in every input; dividing them, with a conditioned
rule for near-zero denominators, emphasizes the frequencies significant
in one group and insignificant in another. This package provides the
spectrum types and algebra, a DFT front end for sampled signals, ranked
detection pipelines, CSV/scenario I/O, and the ``spectra`` CLI.
"""
from .detect import (
    DetectedFrequency,
    common_frequencies,
    emphasized,
    non_common_frequencies,
)
from .dsp import (
    AXIS_CONVENTIONS,
    AXIS_PAPER,
    AXIS_STANDARD,
    SampleSeries,
    SamplingConfig,
    SignalSpec,
    SignalTerm,
    dft_oracle,
    magnitude_spectrum,
    synthesize,
)
from .errors import (
    AllNearZeroError,
    DivisionByNearZeroError,
    EmptyInputError,
    EmptyListError,
    LengthMismatchError,
    MagnitudeBelowFloorError,
    MalformedCsvError,
    MissingHeaderError,
    NegativeMagnitudeError,
    NonPositiveResolutionError,
    NotCongruentError,
    NumericPreconditionError,
    ScenarioError,
    SpectraError,
    TooFewSamplesError,
    ValidationError,
)
from .io import (
    read_samples_csv,
    read_spectrum_csv,
    write_detections_csv,
    write_samples_csv,
    write_spectrum_csv,
)
from .scenario import (
    BUNDLED_SCENARIO_NAMES,
    DEMO_SAMPLING,
    DEMO_SIGNALS,
    CommonJob,
    JobResult,
    NonCommonJob,
    ScenarioSpec,
    SpectrumJob,
    bundled_scenario,
    load_scenario,
    run_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)
from .spectrum import (
    CONGRUENCE_RTOL,
    DEFAULT_EPSILON,
    DEFAULT_INVERSION_FLOOR,
    DivisionPolicy,
    SpectralLine,
    Spectrum,
    group_contrast,
    invert,
    is_congruent,
    make_spectrum,
    normalize_max,
    product,
    ratio,
)

__version__ = "0.1.0"

__all__ = [
    "AXIS_CONVENTIONS",
    "AXIS_PAPER",
    "AXIS_STANDARD",
    "AllNearZeroError",
    "BUNDLED_SCENARIO_NAMES",
    "CONGRUENCE_RTOL",
    "CommonJob",
    "DEFAULT_EPSILON",
    "DEFAULT_INVERSION_FLOOR",
    "DEMO_SAMPLING",
    "DEMO_SIGNALS",
    "DetectedFrequency",
    "DivisionByNearZeroError",
    "DivisionPolicy",
    "EmptyInputError",
    "EmptyListError",
    "JobResult",
    "LengthMismatchError",
    "MagnitudeBelowFloorError",
    "MalformedCsvError",
    "MissingHeaderError",
    "NegativeMagnitudeError",
    "NonCommonJob",
    "NonPositiveResolutionError",
    "NotCongruentError",
    "NumericPreconditionError",
    "SampleSeries",
    "SamplingConfig",
    "ScenarioError",
    "ScenarioSpec",
    "SignalSpec",
    "SignalTerm",
    "SpectraError",
    "SpectralLine",
    "Spectrum",
    "SpectrumJob",
    "TooFewSamplesError",
    "ValidationError",
    "bundled_scenario",
    "common_frequencies",
    "dft_oracle",
    "emphasized",
    "group_contrast",
    "invert",
    "is_congruent",
    "load_scenario",
    "magnitude_spectrum",
    "make_spectrum",
    "non_common_frequencies",
    "normalize_max",
    "product",
    "ratio",
    "read_samples_csv",
    "read_spectrum_csv",
    "run_scenario",
    "save_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "synthesize",
    "write_detections_csv",
    "write_samples_csv",
    "write_spectrum_csv",
]
