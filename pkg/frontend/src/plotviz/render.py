"""Figure rendering: pseudocolor maps, slice overlays, divergence-norm series."""
from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .dumps import read_csv_table, read_dump  # noqa: E402

MAX_SLICE_SERIES = 3


@dataclass
class PlotJob:
    """One figure request: what to read, what kind, which variable, where to."""

    kind: str                      # map | slice | norms
    inputs: list = field(default_factory=list)
    variable: str = "rho"
    output: str = "figure.png"
    labels: list = field(default_factory=list)
    title: str = ""


def render(job: PlotJob) -> str:
    """Produce the figure file for the job and return its path."""
    if job.kind == "map":
        return _render_map(job)
    if job.kind == "slice":
        return _render_slice(job)
    if job.kind == "norms":
        return _render_norms(job)
    raise ValueError(f"unknown figure kind {job.kind!r}")


def _save(fig, path):
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _render_map(job: PlotJob):
    dump = read_dump(job.inputs[0])
    values = dump.variable(job.variable)
    xe, ye = dump.edges()
    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    mesh = ax.pcolormesh(xe, ye, values.T, shading="flat", cmap="viridis")
    fig.colorbar(mesh, ax=ax)
    ax.set_xlim(dump.xmin, dump.xmax)
    ax.set_ylim(dump.ymin, dump.ymax)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_aspect("equal")
    ax.set_title(job.title or
                 f"{dump.problem}: {job.variable} at t={dump.time:g} ({dump.variant})")
    return _save(fig, job.output)


def _render_slice(job: PlotJob):
    if not 1 <= len(job.inputs) <= MAX_SLICE_SERIES:
        raise ValueError(f"slice figures take 1..{MAX_SLICE_SERIES} inputs")
    fig, ax = plt.subplots(figsize=(5.6, 4.0))
    styles = ["-", "--", ":"]
    coord_name = None
    for i, path in enumerate(job.inputs):
        header, cols = read_csv_table(path)
        coord_name = header[0]
        if job.variable not in cols:
            raise KeyError(f"{path} has no column {job.variable!r} "
                           f"(columns: {', '.join(header)})")
        label = job.labels[i] if i < len(job.labels) else path
        ax.plot(cols[coord_name], cols[job.variable], styles[i % 3], label=label)
    ax.set_xlabel(coord_name)
    ax.set_ylabel(job.variable)
    ax.legend()
    ax.set_title(job.title or f"{job.variable} along {coord_name}")
    return _save(fig, job.output)


def _render_norms(job: PlotJob):
    header, cols = read_csv_table(job.inputs[0])
    for needed in ("t", "div_l1", "div_linf"):
        if needed not in cols:
            raise KeyError(f"{job.inputs[0]} has no column {needed!r}")
    fig, ax = plt.subplots(figsize=(5.6, 4.0))
    ax.semilogy(cols["t"], cols["div_l1"], "-", label="L1")
    ax.semilogy(cols["t"], cols["div_linf"], "--", label="Linf")
    ax.set_xlabel("t")
    ax.set_ylabel("discrete divergence")
    ax.legend()
    ax.set_title(job.title or "divergence norms")
    return _save(fig, job.output)
