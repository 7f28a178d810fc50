"""Figure assembly for the three sweep kinds.

Rendering is a pure function of the CSV content: fixed figure geometry,
fixed style, and pinned PNG metadata, so identical inputs produce
identical bytes for a given matplotlib version.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .csvdata import drop_error_rows, read_csv
from .figspec import FigureSpec

_DPI = 150
_COLORS = ["black", "tab:blue", "tab:orange", "tab:green", "tab:red",
           "tab:purple", "tab:brown", "tab:pink"]


def _color(i):
    return _COLORS[i % len(_COLORS)]


def _profile_figure(spec, datasets):
    fig, (ax_rate, ax_shift) = plt.subplots(
        2, 1, sharex=True, figsize=(7.0, 7.0), dpi=_DPI)
    for i, (data, label) in enumerate(datasets):
        delta = data["detuning_rad_s"]
        ax_rate.plot(delta, data["gamma_per_s"], color=_color(i), label=label)
        ax_shift.plot(delta, data["shift_res_rad_s"], color=_color(i), label=label)
    ax_rate.set_ylabel("transition rate (1/s)")
    ax_shift.set_ylabel("resonant shift (rad/s)")
    ax_shift.set_xlabel("detuning (rad/s)")
    ax_rate.legend(loc="upper right", fontsize=8)
    for ax in (ax_rate, ax_shift):
        ax.set_xscale(spec.x_scale)
    ax_rate.set_yscale(spec.y_scale)
    fig.suptitle("Rate and shift profiles")
    return fig


def _velocity_figure(spec, datasets):
    fig, ax = plt.subplots(figsize=(7.0, 5.0), dpi=_DPI)
    for i, (data, label) in enumerate(datasets):
        ax.plot(data["v_m_s"], data["gamma_ratio_to_static"],
                color=_color(i), marker="o", markersize=3, label=label)
    ax.set_xlabel("speed (m/s)")
    ax.set_ylabel("rate relative to static")
    ax.set_xscale(spec.x_scale)
    ax.set_yscale(spec.y_scale)
    ax.legend(loc="best", fontsize=8)
    fig.suptitle("Velocity dependence of the induced rate")
    return fig


def _compare_figure(spec, datasets):
    n = len(datasets)
    fig, axes = plt.subplots(1, n, figsize=(5.5 * n, 5.0), dpi=_DPI,
                             squeeze=False)
    for ax, (data, label) in zip(axes[0], datasets):
        omega = data["omega_rad_s"]
        ax.plot(omega, data["gamma_double_per_s"], color="black",
                label="two plates")
        ax.plot(omega, data["gamma_single_per_s"], color="tab:blue",
                linestyle="--", label="one plate")
        z_um = data["z_m"][0] * 1e6
        ax.set_title(f"{label} (z = {z_um:g} um)", fontsize=10)
        ax.set_xlabel("transition frequency (rad/s)")
        ax.set_ylabel("transition rate (1/s)")
        ax.set_xscale(spec.x_scale)
        ax.set_yscale(spec.y_scale)
        ax.legend(loc="upper right", fontsize=8)
    fig.suptitle("Double-plate vs single-plate static rates")
    return fig


_BUILDERS = {"profile": _profile_figure,
             "velocity": _velocity_figure,
             "compare": _compare_figure}


def render_figure(spec: FigureSpec):
    """Validate every input CSV and build the figure (not yet saved)."""
    datasets = [(drop_error_rows(read_csv(path, spec.kind)), label)
                for path, label in spec.inputs]
    return _BUILDERS[spec.kind](spec, datasets)


def render(spec: FigureSpec) -> None:
    """Render and write the image; bytes depend only on the CSV content."""
    fig = render_figure(spec)
    try:
        fig.savefig(spec.out_path, metadata={"Software": "plotkit"})
    finally:
        plt.close(fig)
