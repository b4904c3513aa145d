"""Benchmark problem definitions: initial data, domains, and run settings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import state as st
from .solver import BoundaryCondition, Grid2D
from .state import GasModel, prim_to_cons

ALPHA = np.pi / 6.0  # propagation angle of the traveling-wave test


@dataclass(frozen=True)
class ProblemSpec:
    """A benchmark: domain, gas, limiter setting, boundaries, and initial data.

    init_prim maps cell-center coordinate arrays to primitive states
    (..., 8); init_aux to the (A, B) pair of magnetic-derivative averages.
    paper_mesh / reference_mesh are the production and reference resolutions
    used for the published figures.
    """

    name: str
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    gamma: float
    theta: float
    bc: BoundaryCondition
    t_final: float
    init_prim: Callable
    init_aux: Callable
    paper_mesh: tuple
    reference_mesh: tuple | None = None

    def grid(self, nx, ny) -> Grid2D:
        return Grid2D(nx, ny, self.xmin, self.xmax, self.ymin, self.ymax)

    def gas(self) -> GasModel:
        return GasModel(self.gamma)

    def initial_field(self, grid: Grid2D):
        """Cell averages of (U, A, B) from midpoint sampling of the data."""
        X, Y = grid.cell_centers()
        V = self.init_prim(X, Y)
        U = prim_to_cons(V, self.gas())
        w = np.empty((grid.nx, grid.ny, st.NAUG))
        w[..., :8] = U
        w[..., 8:] = self.init_aux(X, Y)
        return w


def _zero_aux(x, y):
    ab = np.zeros(np.shape(x) + (2,))
    return ab


def _brio_wu_prim(x, y):
    V = np.empty(np.shape(x) + (8,))
    left = x < 0.0
    V[..., st.VRHO] = np.where(left, 1.0, 0.125)
    V[..., st.VU] = 0.0
    V[..., st.VV] = 0.0
    V[..., st.VW] = 0.0
    V[..., st.VP] = np.where(left, 1.0, 0.1)
    V[..., st.VB1] = 0.75
    V[..., st.VB2] = np.where(left, 1.0, -1.0)
    V[..., st.VB3] = 0.0
    return V


def _alfven_prim_at_phase(shape, phase):
    vperp = 0.1 * np.sin(2.0 * np.pi * phase)
    vpar = 0.0
    wcomp = 0.1 * np.cos(2.0 * np.pi * phase)
    ca, sa = np.cos(ALPHA), np.sin(ALPHA)
    V = np.empty(shape + (8,))
    V[..., st.VRHO] = 1.0
    V[..., st.VU] = vpar * ca + vperp * sa
    V[..., st.VV] = vpar * sa - vperp * ca
    V[..., st.VW] = wcomp
    V[..., st.VP] = 0.1
    V[..., st.VB1] = 1.0 * ca + vperp * sa   # b_par = 1, b_perp = v_perp
    V[..., st.VB2] = 1.0 * sa - vperp * ca
    V[..., st.VB3] = wcomp
    return V


def alfven_exact(x, y, t):
    """Exact traveling-wave solution of the polarized-wave test.

    The transverse perturbations satisfy v_perp = b_perp, which selects the
    branch moving against the mean field: every profile is the initial one
    evaluated at phase + t.  At integer times the wave coincides with the
    initial data.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    phase = x * np.cos(ALPHA) + y * np.sin(ALPHA) + t
    return _alfven_prim_at_phase(np.shape(x), phase)


def _alfven_prim(x, y):
    return alfven_exact(x, y, 0.0)


def _alfven_aux(x, y):
    phase = np.asarray(x) * np.cos(ALPHA) + np.asarray(y) * np.sin(ALPHA)
    a = 0.1 * 2.0 * np.pi * np.sin(ALPHA) * np.cos(ALPHA) * np.cos(2.0 * np.pi * phase)
    ab = np.empty(np.shape(x) + (2,))
    ab[..., 0] = a
    ab[..., 1] = -a
    return ab


def _orszag_tang_prim(x, y):
    gamma = 5.0 / 3.0
    V = np.empty(np.shape(x) + (8,))
    V[..., st.VRHO] = gamma**2
    V[..., st.VU] = -np.sin(y)
    V[..., st.VV] = np.sin(x)
    V[..., st.VW] = 0.0
    V[..., st.VP] = gamma
    V[..., st.VB1] = -np.sin(y)
    V[..., st.VB2] = np.sin(2.0 * x)
    V[..., st.VB3] = 0.0
    return V


def _rotor_prim(x, y):
    r0 = 0.1
    r = np.sqrt((x - 0.5) ** 2 + (y - 0.5) ** 2)
    mu = (0.115 - r) / 0.015
    V = np.empty(np.shape(x) + (8,))
    inner = r < 0.1
    taper = (r >= 0.1) & (r <= 0.115)
    V[..., st.VRHO] = np.where(inner, 10.0, np.where(taper, 1.0 + 9.0 * mu, 1.0))
    rsafe = np.where(r > 0.0, r, 1.0)
    V[..., st.VU] = np.where(inner, (0.5 - y) / r0,
                             np.where(taper, mu * (0.5 - y) / rsafe, 0.0))
    V[..., st.VV] = np.where(inner, (x - 0.5) / r0,
                             np.where(taper, mu * (x - 0.5) / rsafe, 0.0))
    V[..., st.VW] = 0.0
    V[..., st.VP] = 0.5
    V[..., st.VB1] = 2.5 / np.sqrt(4.0 * np.pi)
    V[..., st.VB2] = 0.0
    V[..., st.VB3] = 0.0
    return V


def _blast_prim(x, y):
    V = np.empty(np.shape(x) + (8,))
    V[..., st.VRHO] = 1.0
    V[..., st.VU] = 0.0
    V[..., st.VV] = 0.0
    V[..., st.VW] = 0.0
    V[..., st.VP] = np.where(np.sqrt(x**2 + y**2) < 0.1, 1000.0, 0.1)
    V[..., st.VB1] = 50.0 / np.sqrt(np.pi)
    V[..., st.VB2] = 0.0
    V[..., st.VB3] = 0.0
    return V


_PROBLEMS = {
    "brio_wu": ProblemSpec(
        "brio_wu", -1.0, 1.0, -0.01, 0.01, 2.0, 1.3,
        BoundaryCondition.extrapolate(), 0.2, _brio_wu_prim, _zero_aux,
        paper_mesh=(200, 2), reference_mesh=(10000, 2),
    ),
    "alfven": ProblemSpec(
        "alfven", 0.0, 1.0 / np.cos(ALPHA), 0.0, 1.0 / np.sin(ALPHA), 5.0 / 3.0, 1.3,
        BoundaryCondition.periodic(), 5.0, _alfven_prim, _alfven_aux,
        paper_mesh=(320, 320),
    ),
    "orszag_tang": ProblemSpec(
        "orszag_tang", 0.0, 2.0 * np.pi, 0.0, 2.0 * np.pi, 5.0 / 3.0, 1.3,
        BoundaryCondition.periodic(), 4.0, _orszag_tang_prim, _zero_aux,
        paper_mesh=(200, 200), reference_mesh=(1000, 1000),
    ),
    "rotor": ProblemSpec(
        "rotor", 0.0, 1.0, 0.0, 1.0, 5.0 / 3.0, 1.3,
        BoundaryCondition.periodic(), 0.295, _rotor_prim, _zero_aux,
        paper_mesh=(200, 200), reference_mesh=(1000, 1000),
    ),
    "blast": ProblemSpec(
        "blast", -0.5, 0.5, -0.5, 0.5, 1.4, 1.0,
        BoundaryCondition.extrapolate(), 0.01, _blast_prim, _zero_aux,
        paper_mesh=(200, 200), reference_mesh=(2000, 2000),
    ),
}


def problem_names():
    return sorted(_PROBLEMS)


def problem(name: str) -> ProblemSpec:
    """Look up a benchmark by name; unknown names list the valid ones."""
    try:
        return _PROBLEMS[name]
    except KeyError:
        raise ValueError(
            f"unknown problem {name!r}; valid names: {', '.join(problem_names())}"
        ) from None
