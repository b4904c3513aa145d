"""Grid management, boundary handling, right-hand-side assembly, and the run loop.

The semi-discrete update of the augmented field W = (U, A, B) is assembled
from two symmetric sweeps.  The y-direction reuses the x-direction pipeline
on the transposed field with the roles of (u, b1, A) and (v, b2, B)
exchanged, so every per-interface kernel exists in a single frame.

Pipeline per evaluation: ghost fill -> cell primitives -> characteristic
reconstruction (both frames) -> divergence-enforcing correction of b1/b2
point values -> face conversions -> running path integrals -> global
fluxes (per-wave upwind or scalar central-upwind) -> auxiliary
central-upwind fluxes -> flux differences.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import _kernels as K
from . import state as st
from .errors import AdmissibilityError
from .reconstruction import SlopeLimiterConfig, limited_slope
from .state import GasModel
from .timestepping import TimeControls, compute_dt, ssp_rk3_step

NG = 2
# component swap realizing the x<->y role exchange on the augmented field
_SWAP_AUG = np.array([0, 2, 1, 3, 5, 4, 6, 7, 9, 8])
_SWAP_PRIM = np.array([0, 2, 1, 3, 4, 6, 5, 7])


def _configure_threads():
    n = os.environ.get("MHDCU_NUM_THREADS")
    if n:
        import numba

        numba.set_num_threads(max(1, min(int(n), numba.config.NUMBA_NUM_THREADS)))


_configure_threads()


@dataclass(frozen=True)
class Grid2D:
    """Uniform cell-centered grid; two ghost layers on every side."""

    nx: int
    ny: int
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ValueError("grid needs at least one cell per direction")

    @property
    def dx(self):
        return (self.xmax - self.xmin) / self.nx

    @property
    def dy(self):
        return (self.ymax - self.ymin) / self.ny

    @property
    def xc(self):
        return self.xmin + (np.arange(self.nx) + 0.5) * self.dx

    @property
    def yc(self):
        return self.ymin + (np.arange(self.ny) + 0.5) * self.dy

    def cell_centers(self):
        return np.meshgrid(self.xc, self.yc, indexing="ij")


@dataclass(frozen=True)
class BoundaryCondition:
    """Per-side boundary kinds; periodic sides must come in matching pairs."""

    left: str = "periodic"
    right: str = "periodic"
    bottom: str = "periodic"
    top: str = "periodic"

    _KINDS = ("periodic", "extrapolate")

    def __post_init__(self):
        for side in (self.left, self.right, self.bottom, self.top):
            if side not in self._KINDS:
                raise ValueError(f"unknown boundary kind {side!r}")
        if (self.left == "periodic") != (self.right == "periodic"):
            raise ValueError("periodic x-boundary requires both sides periodic")
        if (self.bottom == "periodic") != (self.top == "periodic"):
            raise ValueError("periodic y-boundary requires both sides periodic")

    @classmethod
    def periodic(cls):
        return cls()

    @classmethod
    def extrapolate(cls):
        return cls("extrapolate", "extrapolate", "extrapolate", "extrapolate")


class SchemeVariant(str, Enum):
    """Flux/correction switches. The uncorrected flavor only skips the
    divergence-enforcing slope correction."""

    LCD_PCCU = "lcd-pccu"
    PCCU = "pccu"
    LCD_PCCU_UNCORRECTED = "lcd-pccu-uncorrected"

    @property
    def corrected(self) -> bool:
        return self is not SchemeVariant.LCD_PCCU_UNCORRECTED

    @property
    def per_wave(self) -> bool:
        return self is not SchemeVariant.PCCU


@dataclass(frozen=True)
class SolverConfig:
    theta: float = 1.3
    eps: float = 1e-8
    floor: bool = False
    floor_value: float = 1e-12

    def __post_init__(self):
        SlopeLimiterConfig(self.theta)  # range check


@dataclass
class RhsInfo:
    """Byproducts of one right-hand-side evaluation."""

    a_x: float
    a_y: float
    div: np.ndarray
    min_rho: float
    min_p: float


@dataclass
class Diagnostics:
    """Per-step time series sampled at the first stage of every step."""

    t: list = field(default_factory=list)
    dt: list = field(default_factory=list)
    div_l1: list = field(default_factory=list)
    div_linf: list = field(default_factory=list)
    mass: list = field(default_factory=list)
    min_rho: list = field(default_factory=list)
    min_p: list = field(default_factory=list)

    def record(self, t, dt, info: RhsInfo, mass, dx, dy):
        self.t.append(t)
        self.dt.append(dt)
        self.div_l1.append(float(np.abs(info.div).sum() * dx * dy))
        self.div_linf.append(float(np.abs(info.div).max()))
        self.mass.append(mass)
        self.min_rho.append(info.min_rho)
        self.min_p.append(info.min_p)

    def as_arrays(self):
        return {k: np.asarray(getattr(self, k)) for k in
                ("t", "dt", "div_l1", "div_linf", "mass", "min_rho", "min_p")}


def fill_ghosts(w, bc: BoundaryCondition, ng=NG):
    """Pad an interior field with ng ghost layers per side (corners filled)."""
    w = np.asarray(w, dtype=np.float64)
    nx, ny = w.shape[0], w.shape[1]
    wg = np.empty((nx + 2 * ng, ny + 2 * ng) + w.shape[2:], dtype=np.float64)
    wg[ng:ng + nx, ng:ng + ny] = w
    if bc.left == "periodic":
        wg[:ng, ng:ng + ny] = w[nx - ng:]
        wg[ng + nx:, ng:ng + ny] = w[:ng]
    else:
        wg[:ng, ng:ng + ny] = w[0]
        wg[ng + nx:, ng:ng + ny] = w[nx - 1]
    if bc.bottom == "periodic":
        wg[:, :ng] = wg[:, ny:ny + ng]
        wg[:, ng + ny:] = wg[:, ng:2 * ng]
    else:
        wg[:, :ng] = wg[:, ng:ng + 1]
        wg[:, ng + ny:] = wg[:, ng + ny - 1:ng + ny]
    return wg


def discrete_divergence(b1_east, b1_west, b2_north, b2_south, dx, dy):
    """Per-cell divergence of the reconstructed field plus (L1, Linf) norms."""
    div = (np.asarray(b1_east) - np.asarray(b1_west)) / dx \
        + (np.asarray(b2_north) - np.asarray(b2_south)) / dy
    return div, float(np.abs(div).sum() * dx * dy), float(np.abs(div).max(initial=0.0))


def _swap_field(w):
    """Transpose the grid and exchange x/y roles of all components."""
    return np.ascontiguousarray(np.transpose(w, (1, 0, 2))[..., _SWAP_AUG])


class _DirectionBundle:
    """Face data of one sweep direction, in its own working frame."""

    __slots__ = ("VE", "VW", "ab_e", "ab_w", "shear")

    def __init__(self, VE, VW, ab_e, ab_w, shear):
        self.VE = VE          # (n+2, m, 8) primitive east faces, slot c+1 = cell c
        self.VW = VW
        self.ab_e = ab_e      # (n+2, m, 2) one-sided (A, B) values
        self.ab_w = ab_w
        self.shear = shear    # (n+2, m) cross-direction velocity derivative


def _face_phase(wg, vg, g: GasModel, cfg: SolverConfig, dx, dy):
    """Reconstruction sweep in the working frame (normal direction = axis 0)."""
    nxg, nyg = wg.shape[0], wg.shape[1]
    nx, ny = nxg - 2 * NG, nyg - 2 * NG

    VE = np.zeros((nx + 2, ny, 8))
    VW = np.zeros((nx + 2, ny, 8))
    K.recon_sweep(wg, vg, g.gamma, cfg.theta, dx, VE, VW)

    # direct minmod reconstruction of the auxiliary averages, one slope per cell
    inner = slice(NG, NG + ny)
    ab = wg[:, inner, 8:10]
    slope = limited_slope(ab[:-2], ab[1:-1], ab[2:], dx, cfg.theta)
    mid = ab[1:-1]
    ab_e = mid + 0.5 * dx * slope
    ab_w = mid - 0.5 * dx * slope

    # cross-direction derivative of the normal velocity at cells -1..nx
    u = vg[..., st.VU]
    shear = (u[1:nxg - 1, NG + 1:NG + ny + 1] - u[1:nxg - 1, NG - 1:NG + ny - 1]) / (2.0 * dy)

    return _DirectionBundle(VE, VW, ab_e, ab_w, shear)


def _apply_correction(wg, xb: _DirectionBundle, yb: _DirectionBundle,
                      bc: BoundaryCondition, dx, dy):
    """Replace b1 east/west and b2 north/south values by corrected ones.

    Returns the per-cell scaling sigma on the interior.  yb lives in the
    swapped frame: its VB1 slot is the physical b2 and its first axis is y.
    """
    nx, ny = xb.VE.shape[0] - 2, xb.VE.shape[1]
    sl = slice(NG, -NG)
    b1bar = wg[sl, sl, st.B1]
    b2bar = wg[sl, sl, st.B2]
    a_bar = wg[sl, sl, st.IA]
    b_bar = wg[sl, sl, st.IB]

    b1hat_e = xb.VE[1:nx + 1, :, st.VB1]
    b1hat_w = xb.VW[1:nx + 1, :, st.VB1]
    b2hat_n = yb.VE[1:ny + 1, :, st.VB1].T
    b2hat_s = yb.VW[1:ny + 1, :, st.VB1].T

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        sx1 = 2.0 * (b1hat_e - b1bar) / (dx * a_bar)
        sx2 = 2.0 * (b1bar - b1hat_w) / (dx * a_bar)
        sy1 = 2.0 * (b2hat_n - b2bar) / (dy * b_bar)
        sy2 = 2.0 * (b2bar - b2hat_s) / (dy * b_bar)
    sig_x = np.where((sx1 > 0) & (sx2 > 0) & (a_bar != 0.0),
                     np.minimum(1.0, np.minimum(sx1, sx2)), 0.0)
    sig_y = np.where((sy1 > 0) & (sy2 > 0) & (b_bar != 0.0),
                     np.minimum(1.0, np.minimum(sy1, sy2)), 0.0)
    sigma = np.minimum(1.0, np.minimum(sig_x, sig_y))

    # one ghost ring of sigma so boundary-interface faces are corrected too
    sig_ext = fill_ghosts(sigma[..., None], bc, ng=1)[..., 0]

    gx = slice(NG - 1, NG + nx + 1)
    gy = slice(NG - 1, NG + ny + 1)
    half_bx = 0.5 * dx * sig_ext[:, 1:-1] * wg[gx, sl, st.IA]
    xb.VE[..., st.VB1] = wg[gx, sl, st.B1] + half_bx
    xb.VW[..., st.VB1] = wg[gx, sl, st.B1] - half_bx
    half_by = 0.5 * dy * sig_ext[1:-1, :].T * wg[sl, gy, st.IB].T
    yb.VE[..., st.VB1] = wg[sl, gy, st.B2].T + half_by
    yb.VW[..., st.VB1] = wg[sl, gy, st.B2].T - half_by
    return sigma


def _check_faces(V_e, V_w, cfg: SolverConfig, what):
    # V_e slot i belongs to cell i-1, V_w slot i to cell i
    for name, V, offset in (("east", V_e, -1), ("west", V_w, 0)):
        if cfg.floor:
            np.maximum(V[..., st.VRHO], cfg.floor_value, out=V[..., st.VRHO])
            np.maximum(V[..., st.VP], cfg.floor_value, out=V[..., st.VP])
            continue
        bad = ~((V[..., st.VRHO] > 0.0) & (V[..., st.VP] > 0.0))
        if np.any(bad):
            i, k = np.argwhere(bad)[0]
            raise AdmissibilityError(
                f"face value ({what} sweep, {name} side)",
                (float(V[i, k, st.VRHO]), float(V[i, k, st.VP])),
                (int(i) + offset, int(k)),
            )


def _flux_phase(wg, bundle: _DirectionBundle, g: GasModel, cfg: SolverConfig,
                per_wave: bool, what, anchor=None):
    """Global fluxes and auxiliary fluxes in the working frame.

    `anchor` (rows, 8) offsets the running path integrals per row; the
    scheme is invariant under it (it only shifts K^E and K^W together),
    and it defaults to the zero anchor at the first interface.
    """
    nx = bundle.VE.shape[0] - 2
    ny = bundle.VE.shape[1]
    _check_faces(bundle.VE[:-1], bundle.VW[1:], cfg, what)
    if anchor is None:
        anchor = np.zeros((ny, 8))
    flux = np.empty((nx + 1, ny, 8))
    aux = np.empty((nx + 1, ny, 2))
    row_speed = np.empty(ny)
    K.flux_sweep(wg, bundle.VE, bundle.VW, bundle.ab_e, bundle.ab_w,
                 bundle.shear, g.gamma, cfg.eps, per_wave,
                 np.ascontiguousarray(anchor), flux, aux, row_speed)
    if not np.isfinite(flux).all():
        i, k = np.argwhere(~np.isfinite(flux).all(axis=-1))[0]
        raise AdmissibilityError(f"{what} flux", "non-finite", (int(i), int(k)))
    return flux, aux, float(row_speed.max(initial=0.0))


def rhs(w, grid: Grid2D, bc: BoundaryCondition, g: GasModel,
        variant: SchemeVariant = SchemeVariant.LCD_PCCU,
        cfg: SolverConfig = SolverConfig(), anchors=None):
    """Semi-discrete right-hand side dW/dt for the interior field w (nx, ny, 10).

    `anchors`, when given, is a pair of per-row offsets ((ny, 8), (nx, 8))
    for the x and y running path integrals; the result is anchor-invariant.
    """
    w = np.asarray(w, dtype=np.float64)
    nx, ny = grid.nx, grid.ny
    dx, dy = grid.dx, grid.dy

    rho = w[..., st.RHO]
    if not cfg.floor and np.any(~(rho > 0.0)):
        j, k = np.argwhere(~(rho > 0.0))[0]
        raise AdmissibilityError("rho", float(rho[j, k]), (int(j), int(k)))

    wg = fill_ghosts(w, bc)
    if cfg.floor:
        np.maximum(wg[..., st.RHO], cfg.floor_value, out=wg[..., st.RHO])
    vg = st.cons_to_prim(wg[..., :8], g)
    if cfg.floor:
        np.maximum(vg[..., st.VP], cfg.floor_value, out=vg[..., st.VP])
    else:
        p_in = vg[NG:-NG, NG:-NG, st.VP]
        if np.any(~(p_in > 0.0)):
            j, k = np.argwhere(~(p_in > 0.0))[0]
            raise AdmissibilityError("p", float(p_in[j, k]), (int(j), int(k)))
    min_rho = float(wg[NG:-NG, NG:-NG, st.RHO].min())
    min_p = float(vg[NG:-NG, NG:-NG, st.VP].min())

    wg_s = _swap_field(wg)
    vg_s = np.ascontiguousarray(np.transpose(vg, (1, 0, 2))[..., _SWAP_PRIM])

    xb = _face_phase(wg, vg, g, cfg, dx, dy)
    yb = _face_phase(wg_s, vg_s, g, cfg, dy, dx)

    if variant.corrected:
        _apply_correction(wg, xb, yb, bc, dx, dy)

    div, _, _ = discrete_divergence(
        xb.VE[1:nx + 1, :, st.VB1], xb.VW[1:nx + 1, :, st.VB1],
        yb.VE[1:ny + 1, :, st.VB1].T, yb.VW[1:ny + 1, :, st.VB1].T, dx, dy)

    ax_anchor, ay_anchor = anchors if anchors is not None else (None, None)
    flux_x, aux_x, a_x = _flux_phase(wg, xb, g, cfg, variant.per_wave, "x",
                                     anchor=ax_anchor)
    flux_y_s, aux_y_s, a_y = _flux_phase(wg_s, yb, g, cfg, variant.per_wave, "y",
                                         anchor=ay_anchor)

    dwdt = np.empty_like(w)
    dwdt[..., :8] = -(flux_x[1:] - flux_x[:-1]) / dx
    dwdt[..., 8:] = -(aux_x[1:] - aux_x[:-1]) / dx
    # unswap the y-contribution back into the physical frame
    dy_cons = -(flux_y_s[1:] - flux_y_s[:-1]) / dy
    dy_aux = -(aux_y_s[1:] - aux_y_s[:-1]) / dy
    dwdt[..., :8] += st.swap_xy_cons(np.transpose(dy_cons, (1, 0, 2)))
    dwdt[..., 8] += dy_aux[..., 1].T
    dwdt[..., 9] += dy_aux[..., 0].T

    return dwdt, RhsInfo(a_x, a_y, div, min_rho, min_p)


@dataclass
class RunResult:
    w: np.ndarray
    t: float
    diagnostics: Diagnostics
    grid: Grid2D
    steps: int


def run(w0, grid: Grid2D, bc: BoundaryCondition, g: GasModel,
        controls: TimeControls,
        variant: SchemeVariant = SchemeVariant.LCD_PCCU,
        cfg: SolverConfig = SolverConfig(),
        snapshot_times=(), snapshot_cb=None) -> RunResult:
    """Integrate to controls.t_final with SSP-RK3 and CFL-adaptive steps.

    Snapshot times are landed on exactly (the step is clipped); snapshot_cb
    is called as snapshot_cb(t, w) at each requested time.
    """
    w = np.array(w0, dtype=np.float64, copy=True)
    t = 0.0
    diag = Diagnostics()
    targets = sorted(s for s in set(float(x) for x in snapshot_times)
                     if 0.0 < s < controls.t_final)
    targets.append(controls.t_final)
    steps = 0
    dxdy = grid.dx * grid.dy
    tiny = 1e-12 * max(controls.t_final, 1.0)

    if controls.t_final <= 0.0:
        if snapshot_cb is not None:
            snapshot_cb(0.0, w)
        return RunResult(w, 0.0, diag, grid, 0)

    def f(v):
        return rhs(v, grid, bc, g, variant, cfg)[0]

    ti = 0
    while t < controls.t_final - tiny:
        k1, info = rhs(w, grid, bc, g, variant, cfg)
        while ti < len(targets) - 1 and targets[ti] <= t + tiny:
            ti += 1
        next_target = targets[ti]
        dt = compute_dt(grid.dx, grid.dy, info.a_x, info.a_y, controls.cfl,
                        t_remaining=next_target - t, dt_min=controls.dt_min, t=t)
        mass = float(w[..., st.RHO].sum() * dxdy)
        diag.record(t, dt, info, mass, grid.dx, grid.dy)
        w = ssp_rk3_step(w, f, dt, first_eval=k1)
        t += dt
        steps += 1
        if snapshot_cb is not None and ti < len(targets) - 1 \
                and abs(t - targets[ti]) <= tiny:
            snapshot_cb(targets[ti], w)
    if snapshot_cb is not None:
        snapshot_cb(controls.t_final, w)
    return RunResult(w, controls.t_final, diag, grid, steps)
