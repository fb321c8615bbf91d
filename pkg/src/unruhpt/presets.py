"""Catalog of figure presets: named parameter scans with standard settings.

Scans over acceleration run the full domain [0, pi/4] with one curve per
interaction time in (0.1, 0.4, 0.9); scans over time run [0, t_max] with
one curve per acceleration in (0.2, 0.4, 0.6). Panels a, b, c of a figure
use operator strengths pi/6, pi/4, pi/3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnknownPresetError
from .linalg import Subsystem
from .ptsym import PTTarget
from .sweep import SweepSpec
from .unruh import R_MAX, Scenario

DEFAULT_STEPS = 200
DEFAULT_T_MAX = 10.0
CURVE_TIMES = (0.1, 0.4, 0.9)
CURVE_ACCELERATIONS = (0.2, 0.4, 0.6)
PANEL_ALPHAS = {"a": np.pi / 6, "b": np.pi / 4, "c": np.pi / 3}


@dataclass(frozen=True)
class PresetDef:
    measure: str
    scenario: Scenario
    pt_target: PTTarget | None
    alpha: float
    sweep_variable: str


_CATALOG: dict[str, PresetDef] = {}


def _add(name: str, measure: str, scenario: Scenario, pt: PTTarget | None, alpha: float, var: str) -> None:
    _CATALOG[name] = PresetDef(measure, scenario, pt, alpha, var)


_add("fig1a", "negativity", Scenario.FIRST_ONLY, None, 0.0, "r")
_add("fig1b", "negativity", Scenario.BOTH, None, 0.0, "r")
_add("fig2a", "naqc", Scenario.FIRST_ONLY, None, 0.0, "r")
_add("fig2b", "naqc", Scenario.BOTH, None, 0.0, "r")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig3{_p}", "negativity", Scenario.FIRST_ONLY, PTTarget.ON_A, _a, "r")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig4{_p}", "negativity", Scenario.FIRST_ONLY, PTTarget.ON_A, _a, "t")
_add("fig5a", "negativity", Scenario.FIRST_ONLY, PTTarget.ON_BOTH, PANEL_ALPHAS["a"], "r")
_add("fig5b", "negativity", Scenario.FIRST_ONLY, PTTarget.ON_BOTH, PANEL_ALPHAS["a"], "t")
_add("fig6a", "negativity", Scenario.BOTH, PTTarget.ON_A, PANEL_ALPHAS["a"], "r")
_add("fig6b", "negativity", Scenario.BOTH, PTTarget.ON_A, PANEL_ALPHAS["a"], "t")
_add("fig6c", "negativity", Scenario.BOTH, PTTarget.ON_BOTH, PANEL_ALPHAS["a"], "r")
_add("fig6d", "negativity", Scenario.BOTH, PTTarget.ON_BOTH, PANEL_ALPHAS["a"], "t")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig7{_p}", "naqc", Scenario.FIRST_ONLY, PTTarget.ON_A, _a, "r")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig8{_p}", "naqc", Scenario.FIRST_ONLY, PTTarget.ON_A, _a, "t")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig9{_p}", "naqc", Scenario.FIRST_ONLY, PTTarget.ON_BOTH, _a, "r")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig10{_p}", "naqc", Scenario.FIRST_ONLY, PTTarget.ON_BOTH, _a, "t")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig11{_p}", "naqc", Scenario.BOTH, PTTarget.ON_A, _a, "r")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig12{_p}", "naqc", Scenario.BOTH, PTTarget.ON_A, _a, "t")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig13{_p}", "naqc", Scenario.BOTH, PTTarget.ON_BOTH, _a, "r")
for _p, _a in PANEL_ALPHAS.items():
    _add(f"fig14{_p}", "naqc", Scenario.BOTH, PTTarget.ON_BOTH, _a, "t")
del _p, _a


def preset_names() -> list[str]:
    return list(_CATALOG)


def preset_definition(name: str) -> PresetDef:
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownPresetError(f"unknown preset {name!r}; see `presets` for the catalog") from None


def figure_preset(
    name: str,
    steps: int = DEFAULT_STEPS,
    t_max: float = DEFAULT_T_MAX,
    measured_party: Subsystem = Subsystem.A,
) -> list[SweepSpec]:
    """SweepSpecs for a preset, one per curve (single spec when no operator)."""
    d = preset_definition(name)
    if d.sweep_variable == "r":
        start, end = 0.0, R_MAX
        fixed_values = CURVE_TIMES if d.pt_target is not None else (0.0,)
    else:
        start, end = 0.0, t_max
        fixed_values = CURVE_ACCELERATIONS
    return [
        SweepSpec(
            scenario=d.scenario,
            pt_target=d.pt_target,
            alpha=d.alpha,
            sweep_variable=d.sweep_variable,
            fixed_value=fv,
            range_start=start,
            range_end=end,
            steps=steps,
            measures=(d.measure,),
            measured_party=measured_party,
        )
        for fv in fixed_values
    ]


def curve_filename(name: str, spec: SweepSpec) -> str:
    """CSV filename for one curve, e.g. fig3a_t=0.1.csv; single-curve
    presets get just <name>.csv."""
    if spec.pt_target is None:
        return f"{name}.csv"
    fixed_name = "t" if spec.sweep_variable == "r" else "r"
    return f"{name}_{fixed_name}={spec.fixed_value:g}.csv"


def curve_label(spec: SweepSpec) -> str:
    if spec.pt_target is None:
        return spec.measures[0]
    fixed_name = "t" if spec.sweep_variable == "r" else "r"
    return f"{fixed_name}={spec.fixed_value:g}"
