"""Declarative analysis scenarios and the runner that executes them.

A scenario names a set of synthetic signals (or sample-CSV inputs), one
sampling configuration, and an ordered list of jobs. Each job produces a
spectrum CSV and a ranked detections CSV in the scenario's output
directory. The JSON schema (version 1):

.. code-block:: json

    {
      "version": 1,
      "sampling": {"sample_rate": 100.0, "sample_count": 256,
                   "drawn_lines": 128, "axis": "paper"},
      "signals": {
        "s1": {"terms": [{"shape": "sin", "sign": 1, "frequency": 11.0,
                          "amplitude": 1.0}]}
      },
      "inputs": {"mic": "recordings/mic.csv"},
      "jobs": [
        {"name": "s1", "type": "spectrum", "signal": "s1", "k": 3},
        {"name": "both", "type": "common", "signals": ["s1", "mic"], "k": 3},
        {"name": "only_s1", "type": "non_common", "emphasize": ["s1"],
         "suppress": ["mic"], "k": 3,
         "division": {"mode": "conditioned", "epsilon": 1e-6}}
      ],
      "output_dir": "out"
    }

``sampling`` and each of its fields default to rate 100 Hz, 256 samples,
128 drawn lines, ``paper`` axis. Jobs without a ``name`` get a
deterministic positional one. ``exclude_dc`` defaults to true on every
job: bin 0 carries the shared offset, not an oscillation.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence, Union

from .detect import DetectedFrequency, emphasized
from .dsp import (
    AXIS_PAPER,
    SamplingConfig,
    SignalSpec,
    SignalTerm,
    magnitude_spectrum,
    synthesize,
)
from .errors import ScenarioError, SpectraError
from .io import read_samples_csv, write_detections_csv, write_spectrum_csv
from .spectrum import DivisionPolicy, Spectrum, group_contrast, product

SCHEMA_VERSION = 1

_NAME_RE = re.compile(r"^[A-Za-z0-9._-]+$")

DEFAULT_SAMPLING = SamplingConfig(
    sample_rate=100.0, sample_count=256, drawn_lines=128, axis_convention=AXIS_PAPER
)


@dataclass(frozen=True)
class SpectrumJob:
    """Emit one signal's spectrum plus its top-k lines."""

    name: str
    signal: str
    k: int = 3
    exclude_dc: bool = True


@dataclass(frozen=True)
class CommonJob:
    """Emit the product spectrum of a group plus its top-k lines."""

    name: str
    signals: tuple[str, ...]
    k: int = 3
    exclude_dc: bool = True


@dataclass(frozen=True)
class NonCommonJob:
    """Emit the group-contrast spectrum of two groups plus its top-k lines."""

    name: str
    emphasize: tuple[str, ...]
    suppress: tuple[str, ...]
    policy: DivisionPolicy = field(default_factory=DivisionPolicy)
    k: int = 3
    exclude_dc: bool = True


Job = Union[SpectrumJob, CommonJob, NonCommonJob]


@dataclass(frozen=True)
class ScenarioSpec:
    """A validated scenario: signals, sampling, jobs, output directory."""

    sampling: SamplingConfig
    signals: Mapping[str, SignalSpec]
    jobs: tuple[Job, ...]
    output_dir: str = "out"
    inputs: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "signals", dict(self.signals))
        object.__setattr__(self, "inputs", dict(self.inputs))
        object.__setattr__(self, "jobs", tuple(self.jobs))
        if not self.jobs:
            raise ScenarioError("scenario defines no jobs")
        known = set(self.signals) | set(self.inputs)
        seen_names: set[str] = set()
        for job in self.jobs:
            if not _NAME_RE.match(job.name):
                raise ScenarioError(f"job name {job.name!r} must match {_NAME_RE.pattern}")
            if job.name in seen_names:
                raise ScenarioError(f"duplicate job name {job.name!r}")
            seen_names.add(job.name)
            if job.k < 1:
                raise ScenarioError(f"job {job.name!r}: k must be >= 1, got {job.k}")
            if isinstance(job, CommonJob) and not job.signals:
                raise ScenarioError(f"job {job.name!r} lists no signals")
            if isinstance(job, NonCommonJob) and (not job.emphasize or not job.suppress):
                raise ScenarioError(f"job {job.name!r} needs non-empty emphasize and suppress lists")
            for ref in _job_references(job):
                if ref not in known:
                    raise ScenarioError(f"job {job.name!r} references unknown signal {ref!r}")


def _job_references(job: Job) -> tuple[str, ...]:
    if isinstance(job, SpectrumJob):
        return (job.signal,)
    if isinstance(job, CommonJob):
        return tuple(job.signals)
    return tuple(job.emphasize) + tuple(job.suppress)


# --- JSON (de)serialization -------------------------------------------------


def _term_to_dict(term: SignalTerm) -> dict:
    return {
        "shape": term.shape,
        "sign": term.sign,
        "frequency": term.frequency,
        "amplitude": term.amplitude,
    }


def _term_from_dict(d: dict, where: str) -> SignalTerm:
    if not isinstance(d, dict):
        raise ScenarioError(f"{where}: term must be an object, got {d!r}")
    try:
        return SignalTerm(
            shape=d.get("shape", "sin"),
            sign=int(d.get("sign", 1)),
            frequency=float(d.get("frequency", 0.0)),
            amplitude=float(d.get("amplitude", 1.0)),
        )
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"{where}: bad term {d!r}: {exc}") from None


def _sampling_to_dict(cfg: SamplingConfig) -> dict:
    return {
        "sample_rate": cfg.sample_rate,
        "sample_count": cfg.sample_count,
        "drawn_lines": cfg.drawn_lines,
        "axis": cfg.axis_convention,
    }


def _sampling_from_dict(d: dict) -> SamplingConfig:
    if not isinstance(d, dict):
        raise ScenarioError(f"'sampling' must be an object, got {d!r}")
    base = _sampling_to_dict(DEFAULT_SAMPLING)
    unknown = set(d) - set(base)
    if unknown:
        raise ScenarioError(f"unknown sampling keys {sorted(unknown)}")
    base.update(d)
    try:
        return SamplingConfig(
            sample_rate=float(base["sample_rate"]),
            sample_count=int(base["sample_count"]),
            drawn_lines=None if base["drawn_lines"] is None else int(base["drawn_lines"]),
            axis_convention=base["axis"],
        )
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"bad sampling section: {exc}") from None


def _policy_to_dict(policy: DivisionPolicy) -> dict:
    return {"mode": policy.mode, "epsilon": policy.epsilon}


def _policy_from_dict(d: dict, where: str) -> DivisionPolicy:
    if not isinstance(d, dict):
        raise ScenarioError(f"{where}: 'division' must be an object, got {d!r}")
    try:
        return DivisionPolicy(
            mode=d.get("mode", "conditioned"),
            epsilon=float(d.get("epsilon", DivisionPolicy().epsilon)),
        )
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"{where}: bad division policy {d!r}: {exc}") from None


def _job_to_dict(job: Job) -> dict:
    if isinstance(job, SpectrumJob):
        return {
            "name": job.name,
            "type": "spectrum",
            "signal": job.signal,
            "k": job.k,
            "exclude_dc": job.exclude_dc,
        }
    if isinstance(job, CommonJob):
        return {
            "name": job.name,
            "type": "common",
            "signals": list(job.signals),
            "k": job.k,
            "exclude_dc": job.exclude_dc,
        }
    return {
        "name": job.name,
        "type": "non_common",
        "emphasize": list(job.emphasize),
        "suppress": list(job.suppress),
        "division": _policy_to_dict(job.policy),
        "k": job.k,
        "exclude_dc": job.exclude_dc,
    }


def _job_from_dict(d: dict, position: int) -> Job:
    if not isinstance(d, dict):
        raise ScenarioError(f"job {position}: must be an object, got {d!r}")
    kind = d.get("type")
    name = d.get("name", f"job{position:02d}_{kind}")
    k = d.get("k", 3)
    exclude_dc = d.get("exclude_dc", True)
    if not isinstance(k, int) or isinstance(k, bool):
        raise ScenarioError(f"job {name!r}: k must be an integer, got {k!r}")
    if not isinstance(exclude_dc, bool):
        raise ScenarioError(f"job {name!r}: exclude_dc must be a boolean, got {exclude_dc!r}")
    if kind == "spectrum":
        if "signal" not in d:
            raise ScenarioError(f"job {name!r}: spectrum jobs need a 'signal'")
        return SpectrumJob(name=name, signal=d["signal"], k=k, exclude_dc=exclude_dc)
    if kind == "common":
        names = d.get("signals")
        if not isinstance(names, list) or not names:
            raise ScenarioError(f"job {name!r}: common jobs need a non-empty 'signals' list")
        return CommonJob(name=name, signals=tuple(names), k=k, exclude_dc=exclude_dc)
    if kind == "non_common":
        emphasize = d.get("emphasize")
        suppress = d.get("suppress")
        if not isinstance(emphasize, list) or not emphasize:
            raise ScenarioError(f"job {name!r}: non_common jobs need a non-empty 'emphasize' list")
        if not isinstance(suppress, list) or not suppress:
            raise ScenarioError(f"job {name!r}: non_common jobs need a non-empty 'suppress' list")
        policy = _policy_from_dict(d.get("division", {}), f"job {name!r}")
        return NonCommonJob(
            name=name,
            emphasize=tuple(emphasize),
            suppress=tuple(suppress),
            policy=policy,
            k=k,
            exclude_dc=exclude_dc,
        )
    raise ScenarioError(f"job {position}: unknown type {kind!r}")


def scenario_to_dict(spec: ScenarioSpec) -> dict:
    """Plain-JSON representation; inverse of :func:`scenario_from_dict`."""
    out: dict = {
        "version": SCHEMA_VERSION,
        "sampling": _sampling_to_dict(spec.sampling),
        "signals": {
            name: {"terms": [_term_to_dict(t) for t in sig.terms]}
            for name, sig in spec.signals.items()
        },
        "jobs": [_job_to_dict(j) for j in spec.jobs],
        "output_dir": str(spec.output_dir),
    }
    if spec.inputs:
        out["inputs"] = {name: str(path) for name, path in spec.inputs.items()}
    return out


def scenario_from_dict(data: dict) -> ScenarioSpec:
    """Parse and validate a scenario dictionary (see module docstring)."""
    if not isinstance(data, dict):
        raise ScenarioError(f"scenario must be an object, got {data!r}")
    version = data.get("version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ScenarioError(f"unsupported scenario version {version!r}, expected {SCHEMA_VERSION}")
    sampling = _sampling_from_dict(data.get("sampling", {}))
    signals_raw = data.get("signals", {})
    if not isinstance(signals_raw, dict):
        raise ScenarioError(f"'signals' must be an object, got {signals_raw!r}")
    signals = {}
    for name, sig in signals_raw.items():
        if not _NAME_RE.match(name):
            raise ScenarioError(f"signal name {name!r} must match {_NAME_RE.pattern}")
        if not isinstance(sig, dict) or "terms" not in sig:
            raise ScenarioError(f"signal {name!r} must be an object with a 'terms' list")
        terms = sig["terms"]
        if not isinstance(terms, list) or not terms:
            raise ScenarioError(f"signal {name!r} needs a non-empty 'terms' list")
        signals[name] = SignalSpec(tuple(_term_from_dict(t, f"signal {name!r}") for t in terms))
    inputs_raw = data.get("inputs", {})
    if not isinstance(inputs_raw, dict):
        raise ScenarioError(f"'inputs' must be an object, got {inputs_raw!r}")
    for name in inputs_raw:
        if not _NAME_RE.match(name):
            raise ScenarioError(f"input name {name!r} must match {_NAME_RE.pattern}")
    jobs_raw = data.get("jobs")
    if not isinstance(jobs_raw, list):
        raise ScenarioError("scenario needs a 'jobs' list")
    jobs = tuple(_job_from_dict(j, i + 1) for i, j in enumerate(jobs_raw))
    return ScenarioSpec(
        sampling=sampling,
        signals=signals,
        jobs=jobs,
        output_dir=data.get("output_dir", "out"),
        inputs={n: str(p) for n, p in inputs_raw.items()},
    )


def load_scenario(path: str | Path) -> ScenarioSpec:
    """Load a scenario JSON file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON: {exc}") from None
    return scenario_from_dict(data)


def save_scenario(spec: ScenarioSpec, path: str | Path) -> None:
    """Write a scenario JSON file that :func:`load_scenario` reads back."""
    text = json.dumps(scenario_to_dict(spec), indent=2, sort_keys=False) + "\n"
    Path(path).write_text(text, encoding="utf-8", newline="\n")


# --- bundled demonstration scenarios ----------------------------------------


def _three_tone(sin_low: float, cos_mid: float, sin_high: float) -> SignalSpec:
    return SignalSpec(
        (
            SignalTerm("sin", 1, sin_low),
            SignalTerm("cos", 1, cos_mid),
            SignalTerm("sin", -1, sin_high),
        )
    )


#: Five bundled three-tone test signals. Their pairwise overlaps exercise
#: every pipeline: s1 and s2 share 13 Hz; s4 and s5 share 17 and 23 Hz;
#: 11 and 17 Hz are the tones of s1 absent from s2, and so on.
DEMO_SIGNALS: dict[str, SignalSpec] = {
    "s1": _three_tone(11.0, 13.0, 17.0),
    "s2": _three_tone(7.0, 13.0, 23.0),
    "s3": _three_tone(7.0, 11.0, 23.0),
    "s4": _three_tone(7.0, 17.0, 23.0),
    "s5": _three_tone(10.0, 17.0, 23.0),
}

#: Sampling used by the bundled scenarios: 100 Hz, 256 samples, 128 drawn
#: lines, 0.392157 Hz line spacing.
DEMO_SAMPLING = DEFAULT_SAMPLING

BUNDLED_SCENARIO_NAMES = ("figures_1_to_4", "figures_8_to_10")


def bundled_scenario(name: str, output_dir: str | None = None) -> ScenarioSpec:
    """Build one of the bundled demonstration scenarios by name.

    ``figures_1_to_4`` emits the s1 and s2 spectra, their product (the
    shared 13 Hz tone dominates), and both conditioned ratios (each
    channel's private tones dominate). ``figures_8_to_10`` runs the
    grouped variants over s1..s5, including the plain-vs-conditioned
    division comparison.
    """
    if name not in BUNDLED_SCENARIO_NAMES:
        raise ScenarioError(
            f"unknown bundled scenario {name!r}; available: {', '.join(BUNDLED_SCENARIO_NAMES)}"
        )
    conditioned = DivisionPolicy.conditioned()
    plain = DivisionPolicy.plain()
    if name == "figures_1_to_4":
        jobs: tuple[Job, ...] = (
            SpectrumJob("s1", "s1"),
            SpectrumJob("s2", "s2"),
            CommonJob("common_s1_s2", ("s1", "s2")),
            NonCommonJob("noncommon_s1_vs_s2", ("s1",), ("s2",), conditioned),
            NonCommonJob("noncommon_s2_vs_s1", ("s2",), ("s1",), conditioned),
        )
        signals = {k: DEMO_SIGNALS[k] for k in ("s1", "s2")}
    else:
        jobs = (
            CommonJob("common_s1_s2_s3", ("s1", "s2", "s3")),
            CommonJob("common_s4_s5", ("s4", "s5")),
            CommonJob("common_all", ("s1", "s2", "s3", "s4", "s5")),
            NonCommonJob("noncommon_s123_vs_s45", ("s1", "s2", "s3"), ("s4", "s5"), conditioned),
            NonCommonJob("noncommon_s45_vs_s123_plain", ("s4", "s5"), ("s1", "s2", "s3"), plain),
            NonCommonJob("noncommon_s45_vs_s123_conditioned", ("s4", "s5"), ("s1", "s2", "s3"), conditioned),
        )
        signals = dict(DEMO_SIGNALS)
    return ScenarioSpec(
        sampling=DEMO_SAMPLING,
        signals=signals,
        jobs=jobs,
        output_dir=output_dir if output_dir is not None else name,
    )


# --- execution ---------------------------------------------------------------


@dataclass(frozen=True)
class JobResult:
    """What one job produced: its detections and the files written."""

    name: str
    detections: tuple[DetectedFrequency, ...]
    spectrum_path: Path
    detections_path: Path

    @property
    def top(self) -> DetectedFrequency | None:
        return self.detections[0] if self.detections else None


def run_scenario(spec: ScenarioSpec, output_dir: str | Path | None = None) -> list[JobResult]:
    """Execute every job in declared order, writing CSVs per job.

    Each job writes ``<name>_spectrum.csv`` and ``<name>_detections.csv``
    into the output directory (``output_dir`` overrides the scenario's
    own). Spectra of named signals are computed once and reused across
    jobs. Any error raised by a job is re-raised with the job name
    prefixed, keeping its type and exit-code category.
    """
    out = Path(output_dir) if output_dir is not None else Path(spec.output_dir)
    out.mkdir(parents=True, exist_ok=True)

    cache: dict[str, Spectrum] = {}

    def spectrum_for(ref: str) -> Spectrum:
        if ref not in cache:
            if ref in spec.signals:
                series = synthesize(spec.signals[ref], spec.sampling)
            else:
                series = read_samples_csv(spec.inputs[ref])
            cache[ref] = magnitude_spectrum(series)
        return cache[ref]

    results: list[JobResult] = []
    for job in spec.jobs:
        try:
            if isinstance(job, SpectrumJob):
                result_spectrum = spectrum_for(job.signal)
            elif isinstance(job, CommonJob):
                result_spectrum = product([spectrum_for(n) for n in job.signals])
            else:
                result_spectrum = group_contrast(
                    [spectrum_for(n) for n in job.emphasize],
                    [spectrum_for(n) for n in job.suppress],
                    job.policy,
                )
            detections = emphasized(result_spectrum, job.k, job.exclude_dc)
        except SpectraError as exc:
            exc.args = (f"job {job.name!r}: {exc}",)
            raise
        spectrum_path = out / f"{job.name}_spectrum.csv"
        detections_path = out / f"{job.name}_detections.csv"
        write_spectrum_csv(result_spectrum, spectrum_path)
        write_detections_csv(detections, detections_path)
        results.append(JobResult(job.name, tuple(detections), spectrum_path, detections_path))
    return results
