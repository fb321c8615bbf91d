"""Parameter sweeps over acceleration or interaction time, emitted as CSV."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, IoError, SingularEvolutionError
from .linalg import Subsystem
from .measures import naqc, negativity
from .ptsym import PTParams, PTTarget, evolve
from .unruh import R_MAX, AccelerationSpec, Scenario, TwoQubitState, accelerate, bell_phi_plus

CSV_HEADER = "r,t,alpha,scenario,pt_target,negativity,naqc"
MEASURE_NAMES = ("negativity", "naqc")


@dataclass(frozen=True)
class SweepSpec:
    """One curve: scenario, optional operator placement, and a 1-d grid.

    ``sweep_variable`` is "r" or "t"; ``fixed_value`` is whichever of the
    two is not swept. With no operator (pt_target None) alpha and t are
    ignored and recorded as 0.
    """

    scenario: Scenario
    pt_target: PTTarget | None
    alpha: float
    sweep_variable: str
    fixed_value: float
    range_start: float
    range_end: float
    steps: int
    measures: tuple[str, ...]
    measured_party: Subsystem = Subsystem.A

    def __post_init__(self) -> None:
        if self.scenario is Scenario.NONE:
            raise DomainError("sweeps require an accelerated scenario (first_only or both)")
        if self.sweep_variable not in ("r", "t"):
            raise DomainError(f"sweep_variable must be 'r' or 't', got {self.sweep_variable!r}")
        if self.steps < 2:
            raise DomainError(f"steps must be >= 2, got {self.steps}")
        if not self.measures or any(m not in MEASURE_NAMES for m in self.measures):
            raise DomainError(f"measures must be a non-empty subset of {MEASURE_NAMES}")
        if self.range_start > self.range_end:
            raise DomainError("range_start must not exceed range_end")
        lo, hi = (0.0, R_MAX) if self.sweep_variable == "r" else (0.0, np.inf)
        if not (lo <= self.range_start and self.range_end <= hi):
            raise DomainError(
                f"{self.sweep_variable} range [{self.range_start}, {self.range_end}] outside domain"
            )
        fixed_lo, fixed_hi = (0.0, np.inf) if self.sweep_variable == "r" else (0.0, R_MAX)
        if not fixed_lo <= self.fixed_value <= fixed_hi:
            raise DomainError(f"fixed value {self.fixed_value} outside domain")
        if self.pt_target is not None:
            PTParams(self.alpha, 0.0)  # validates alpha early


@dataclass(frozen=True)
class MeasureRecord:
    r: float
    t: float
    alpha: float
    scenario: str
    pt_target: str
    negativity: float | None
    naqc: float | None


def _evaluate(spec: SweepSpec, value: float) -> MeasureRecord:
    r = value if spec.sweep_variable == "r" else spec.fixed_value
    t = value if spec.sweep_variable == "t" else spec.fixed_value
    state: TwoQubitState = accelerate(bell_phi_plus(), AccelerationSpec(r, spec.scenario))
    if spec.pt_target is not None:
        state = evolve(state, PTParams(spec.alpha, t), spec.pt_target)
        t_out, alpha_out, pt_label = t, spec.alpha, spec.pt_target.value
    else:
        t_out, alpha_out, pt_label = 0.0, 0.0, "none"
    neg = negativity(state) if "negativity" in spec.measures else None
    adv = naqc(state, spec.measured_party) if "naqc" in spec.measures else None
    return MeasureRecord(r, t_out, alpha_out, spec.scenario.value, pt_label, neg, adv)


def run_sweep(spec: SweepSpec) -> list[MeasureRecord]:
    """One record per grid point in ascending sweep-variable order.

    Deterministic for a given spec. A domain or evolution error aborts the
    sweep, re-raised with the offending grid point named.
    """
    grid = np.linspace(spec.range_start, spec.range_end, spec.steps)
    records = []
    for value in grid:
        try:
            records.append(_evaluate(spec, float(value)))
        except (DomainError, SingularEvolutionError, OverflowError) as err:
            raise err.__class__(
                f"sweep aborted at {spec.sweep_variable}={value:.9g}: {err}"
            ) from err
    return records


def _fmt(x: float | None) -> str:
    if x is None:
        return ""
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".12g")


def csv_text(records: list[MeasureRecord]) -> str:
    """CSV payload: header then one row per record, 12 significant digits,
    empty fields for absent measures, LF line endings."""
    lines = [CSV_HEADER]
    for rec in records:
        lines.append(
            ",".join(
                (
                    _fmt(rec.r),
                    _fmt(rec.t),
                    _fmt(rec.alpha),
                    rec.scenario,
                    rec.pt_target,
                    _fmt(rec.negativity),
                    _fmt(rec.naqc),
                )
            )
        )
    return "\n".join(lines) + "\n"


def emit_csv(records: list[MeasureRecord], destination: Path | str) -> None:
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text(records))
    except OSError as err:
        raise IoError(f"cannot write {destination}: {err}") from err
