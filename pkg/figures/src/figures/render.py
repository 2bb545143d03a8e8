"""Headless rendering of the four figure kinds.

Styling is pinned so a given input renders to identical bytes; format
metadata that would embed timestamps (SVG Date, PDF CreationDate) is
stripped at save time.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .specs import FigureSpec, load_inputs  # noqa: E402

STYLE = {
    "figure.figsize": (6.4, 4.2),
    "figure.dpi": 130,
    "savefig.dpi": 130,
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.25,
    "grid.linewidth": 0.4,
    "lines.linewidth": 1.4,
    "svg.hashsalt": "figures",
}

REGIME_SHADES = {1: "#c6dbef", 2: "#fdd0a2", 3: "#c7e9c0"}
CLASS_COLORS = {
    "unstable": "#b2182b",
    "metastable": "#ef8a62",
    "absolutely_stable": "#2166ac",
}

_SAVE_METADATA = {
    ".svg": {"Date": None},
    ".pdf": {"CreationDate": None},
    ".png": {"Software": "figures"},
}


def _plot_potential(fig, data, extra, spec):
    ax = fig.subplots()
    ax.plot(data["phi"], data["V1"], label="tilted double well",
            color="#2166ac")
    with np.errstate(invalid="ignore"):
        ax.plot(data["phi"], data["V2"], label="softened harmonic",
                color="#ef8a62", linestyle="--", linewidth=1.0)
    ax.plot(data["phi"], data["V3"], label="harmonic", color="#999999",
            linestyle=":", linewidth=1.0)
    if extra is not None:
        ax.plot(extra["phi_t"], extra["v_t"], "v", color="#1a9850",
                markersize=8, label="true vacuum", zorder=5)
        ax.plot(extra["phi_f"], extra["v_f"], "^", color="#d73027",
                markersize=8, label="false vacuum", zorder=5)
    finite = data["V1"][np.isfinite(data["V1"])]
    ax.set_ylim(-0.05 * finite.max(), 1.1 * finite.max())
    ax.set_xlabel(spec.xlabel or r"$\phi$")
    ax.set_ylabel(spec.ylabel or r"$V(\phi)$")
    ax.legend(loc="upper center", ncol=2)


def _plot_profile(fig, data, extra, spec):
    ax = fig.subplots()
    ax.plot(data["x"], data["phi"], color="#2166ac")
    ax.axhline(0.0, color="#999999", linewidth=0.6, linestyle=":")
    ax.axhline(2 * np.pi, color="#999999", linewidth=0.6, linestyle=":")
    ax.set_xlabel(spec.xlabel or r"$x$")
    ax.set_ylabel(spec.ylabel or r"$\phi(x)$")
    ax.set_title("wall pair enclosing the nucleated region", fontsize=9)


def _plot_trajectory(fig, data, extra, spec):
    ax_phi, ax_n = fig.subplots(2, 1, sharex=True,
                                gridspec_kw={"height_ratios": [2, 1]})
    ax_phi.plot(data["t"], data["phi"], color="#2166ac")
    ax_n.plot(data["t"], data["N"], color="#7b3294")
    if spec.shade_regimes:
        regimes = data["regime"].astype(int)
        start = 0
        for i in range(1, len(regimes) + 1):
            if i == len(regimes) or regimes[i] != regimes[start]:
                for ax in (ax_phi, ax_n):
                    ax.axvspan(data["t"][start], data["t"][min(i, len(regimes) - 1)],
                               color=REGIME_SHADES[int(regimes[start])],
                               alpha=0.5, linewidth=0)
                start = i
    ax_phi.set_ylabel(spec.ylabel or r"$\phi(t)$")
    ax_n.set_ylabel(r"$N_{e\text{-}folds}$")
    ax_n.set_xlabel(spec.xlabel or r"$t$")


def _plot_ballscan(fig, data, extra, spec):
    ax_m, ax_r = fig.subplots(2, 1, sharex=True)
    for cls, color in CLASS_COLORS.items():
        mask = data["class"] == cls
        if np.any(mask):
            ax_m.loglog(data["B"][mask], data["M_B"][mask], "o",
                        color=color, markersize=3.5,
                        label=cls.replace("_", " "))
    ax_m.loglog(data["B"], data["M_B"], color="#cccccc", linewidth=0.8,
                zorder=0)
    ax_m.set_ylabel(r"$M_B$")
    ax_m.legend(loc="upper left")
    ax_r.loglog(data["B"], data["R0"], color="#2166ac")
    ax_r.set_ylabel(r"$R_0$")
    ax_r.set_xlabel(spec.xlabel or r"$B$")


_PLOTTERS = {
    "potential": _plot_potential,
    "profile": _plot_profile,
    "trajectory": _plot_trajectory,
    "ballscan": _plot_ballscan,
}


def build_figure(spec: FigureSpec):
    """Build the matplotlib Figure for a spec (no file output)."""
    data, extra = load_inputs(spec)
    with plt.rc_context(STYLE):
        fig = plt.figure()
        _PLOTTERS[spec.kind](fig, data, extra, spec)
        fig.tight_layout()
    return fig


def render(spec: FigureSpec) -> str:
    """Render a spec to its output image; returns the output path."""
    fig = build_figure(spec)
    suffix = Path(spec.out).suffix.lower()
    metadata = _SAVE_METADATA.get(suffix)
    try:
        with plt.rc_context(STYLE):  # svg.hashsalt applies at save time
            fig.savefig(spec.out, metadata=metadata)
    finally:
        plt.close(fig)
    return spec.out
