"""Render swept curves to PNG files next to the CSV output."""

from __future__ import annotations

from pathlib import Path

from .sweep import MeasureRecord, SweepSpec

_LINESTYLES = ("-", "--", ":", "-.")

_AXIS_LABELS = {"r": "acceleration r", "t": "interaction time t"}
_MEASURE_LABELS = {"negativity": "negativity", "naqc": "nonlocal coherence advantage"}


def render_curves(
    curves: list[tuple[str, SweepSpec, list[MeasureRecord]]],
    out_path: Path | str,
    title: str = "",
) -> None:
    """Draw every (label, spec, records) curve on one axes and save a PNG.

    Each measure present in a curve's records becomes its own line; the
    x axis is the swept variable of the first spec.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if not curves:
        raise ValueError("nothing to plot")
    sweep_var = curves[0][1].sweep_variable
    measures = curves[0][1].measures
    fig, ax = plt.subplots(figsize=(5.2, 3.5))
    for idx, (label, spec, records) in enumerate(curves):
        xs = [rec.r if spec.sweep_variable == "r" else rec.t for rec in records]
        style = _LINESTYLES[idx % len(_LINESTYLES)]
        for measure in spec.measures:
            ys = [getattr(rec, measure) for rec in records]
            line_label = label if len(spec.measures) == 1 else f"{label} {measure}".strip()
            ax.plot(xs, ys, style, label=line_label)
    ax.set_xlabel(_AXIS_LABELS[sweep_var])
    ax.set_ylabel(" / ".join(_MEASURE_LABELS[m] for m in measures))
    if title:
        ax.set_title(title)
    if any(label for label, _, _ in curves):
        ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
