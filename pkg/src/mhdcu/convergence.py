"""Mesh-refinement study against the exact traveling-wave solution."""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from . import state as st
from .problems import alfven_exact, problem
from .solver import SchemeVariant, SolverConfig, run
from .timestepping import TimeControls


@dataclass(frozen=True)
class ConvergenceRow:
    mesh: int
    err_u: float
    rate_u: float | None
    err_b3: float
    rate_b3: float | None


def l1_errors(w, grid, g, t):
    """Cell-center L1 differences of u and b3 against the exact wave."""
    X, Y = grid.cell_centers()
    Vex = alfven_exact(X, Y, t)
    V = st.cons_to_prim(w[..., :8], g)
    area = grid.dx * grid.dy
    err_u = float(np.abs(V[..., st.VU] - Vex[..., st.VU]).sum() * area)
    err_b3 = float(np.abs(V[..., st.VB3] - Vex[..., st.VB3]).sum() * area)
    return err_u, err_b3


def observed_rate(coarse, fine):
    """log2 error-reduction rate for a factor-2 mesh refinement."""
    if coarse == fine:
        return 0.0
    if coarse <= 0.0 or fine <= 0.0:
        raise ValueError("errors must be positive")
    return float(np.log2(coarse / fine))


def convergence_study(meshes, variant=SchemeVariant.LCD_PCCU, t_final=None,
                      cfl=0.25, problem_name="alfven"):
    """Run the traveling-wave test on a nested mesh sequence.

    Returns one ConvergenceRow per mesh; rates compare consecutive meshes
    (None on the first row).
    """
    meshes = [int(m) for m in meshes]
    for a, b in zip(meshes, meshes[1:]):
        if b != 2 * a:
            raise ValueError(f"meshes must be nested by factor 2, got {a} -> {b}")
    spec = problem(problem_name)
    if t_final is None:
        t_final = spec.t_final
    g = spec.gas()
    rows = []
    prev = None
    for n in meshes:
        grid = spec.grid(n, n)
        res = run(spec.initial_field(grid), grid, spec.bc, g,
                  TimeControls(t_final=t_final, cfl=cfl), variant=variant,
                  cfg=SolverConfig(theta=spec.theta))
        err_u, err_b3 = l1_errors(res.w, grid, g, t_final)
        if prev is None:
            rows.append(ConvergenceRow(n, err_u, None, err_b3, None))
        else:
            rows.append(ConvergenceRow(n, err_u, observed_rate(prev[0], err_u),
                                       err_b3, observed_rate(prev[1], err_b3)))
        prev = (err_u, err_b3)
    return rows


def write_convergence_csv(rows, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["mesh", "err_u", "rate_u", "err_b3", "rate_b3"])
        for r in rows:
            writer.writerow([
                r.mesh, repr(r.err_u),
                "" if r.rate_u is None else f"{r.rate_u:.2f}",
                repr(r.err_b3),
                "" if r.rate_b3 is None else f"{r.rate_b3:.2f}",
            ])
