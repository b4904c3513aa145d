"""State vectors, EOS conversions, and physical fluxes of the eight-wave MHD system.

Conservative variables are ordered (rho, rho*u, rho*v, rho*w, b1, b2, b3, E);
primitive variables (rho, u, v, w, p, b1, b2, b3).  All functions are
vectorized over leading axes: a "state" is any array whose last axis has
length 8 (or 10 for the augmented field that also carries A = (b1)_x and
B = (b2)_y in trailing slots).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AdmissibilityError

# conservative slots
RHO, MX, MY, MZ, B1, B2, B3, EN = range(8)
# primitive slots
VRHO, VU, VV, VW, VP, VB1, VB2, VB3 = range(8)
# augmented trailing slots (cell averages of A and B)
IA, IB = 8, 9
NCONS = 8
NAUG = 10

# index maps that exchange the roles of x and y: u<->v and b1<->b2
_SWAP_CONS = np.array([RHO, MY, MX, MZ, B2, B1, B3, EN])
_SWAP_PRIM = np.array([VRHO, VV, VU, VW, VP, VB2, VB1, VB3])


@dataclass(frozen=True)
class GasModel:
    """Ideal-gas EOS closure with specific-heat ratio gamma > 1."""

    gamma: float

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")

    def gamma_n(self, n: float) -> float:
        """The derived coefficient gamma_n := n - gamma."""
        return n - self.gamma


def _first_offender(mask):
    """(location, value-index) of the first True entry of a boolean field."""
    idx = np.argwhere(mask)
    if idx.size == 0:
        return None
    return tuple(int(i) for i in idx[0])


def cons_to_prim(U, g: GasModel):
    """Recover (rho, u, v, w, p, b1, b2, b3) from a conservative state.

    Raises AdmissibilityError when any density is non-positive.  The
    recovered pressure may come out non-positive; use `check_admissible`
    to flag that separately.
    """
    U = np.asarray(U, dtype=np.float64)
    rho = U[..., RHO]
    bad = ~(rho > 0.0)
    if np.any(bad):
        loc = _first_offender(bad)
        raise AdmissibilityError("rho", float(rho[loc]) if loc else float(rho), loc)
    V = np.empty_like(U)
    V[..., VRHO] = rho
    V[..., VU] = U[..., MX] / rho
    V[..., VV] = U[..., MY] / rho
    V[..., VW] = U[..., MZ] / rho
    ke = 0.5 * (U[..., MX] * V[..., VU] + U[..., MY] * V[..., VV] + U[..., MZ] * V[..., VW])
    mag = 0.5 * (U[..., B1] ** 2 + U[..., B2] ** 2 + U[..., B3] ** 2)
    V[..., VP] = (g.gamma - 1.0) * (U[..., EN] - ke - mag)
    V[..., VB1] = U[..., B1]
    V[..., VB2] = U[..., B2]
    V[..., VB3] = U[..., B3]
    return V


def prim_to_cons(V, g: GasModel):
    """EOS completion E = p/(gamma-1) + rho|u|^2/2 + |b|^2/2."""
    V = np.asarray(V, dtype=np.float64)
    rho = V[..., VRHO]
    bad = ~(rho > 0.0)
    if np.any(bad):
        loc = _first_offender(bad)
        raise AdmissibilityError("rho", float(rho[loc]) if loc else float(rho), loc)
    U = np.empty_like(V)
    U[..., RHO] = rho
    U[..., MX] = rho * V[..., VU]
    U[..., MY] = rho * V[..., VV]
    U[..., MZ] = rho * V[..., VW]
    U[..., B1] = V[..., VB1]
    U[..., B2] = V[..., VB2]
    U[..., B3] = V[..., VB3]
    ke = 0.5 * rho * (V[..., VU] ** 2 + V[..., VV] ** 2 + V[..., VW] ** 2)
    mag = 0.5 * (V[..., VB1] ** 2 + V[..., VB2] ** 2 + V[..., VB3] ** 2)
    U[..., EN] = V[..., VP] / (g.gamma - 1.0) + ke + mag
    return U


def pressure(U, g: GasModel):
    """Gas pressure recovered through the EOS."""
    return cons_to_prim(U, g)[..., VP]


def check_admissible(U, g: GasModel):
    """Raise AdmissibilityError unless rho > 0, p > 0, and all entries are finite."""
    U = np.asarray(U, dtype=np.float64)
    bad = ~np.isfinite(U).all(axis=-1)
    if np.any(bad):
        loc = _first_offender(bad)
        raise AdmissibilityError("state", "non-finite", loc)
    p = pressure(U, g)
    bad = ~(p > 0.0)
    if np.any(bad):
        loc = _first_offender(bad)
        raise AdmissibilityError("p", float(p[loc]) if loc else float(p), loc)


def floor_prim(V, rho_floor=1e-12, p_floor=1e-12):
    """Clamp rho and p from below (opt-in floor mode; off by default)."""
    V = np.array(V, dtype=np.float64, copy=True)
    np.maximum(V[..., VRHO], rho_floor, out=V[..., VRHO])
    np.maximum(V[..., VP], p_floor, out=V[..., VP])
    return V


def flux_x(U, g: GasModel):
    """Physical x-flux F(U); the b1 slot is identically zero."""
    U = np.asarray(U, dtype=np.float64)
    V = cons_to_prim(U, g)
    u, v, w = V[..., VU], V[..., VV], V[..., VW]
    b1, b2, b3 = U[..., B1], U[..., B2], U[..., B3]
    pt = V[..., VP] + 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    ub = u * b1 + v * b2 + w * b3
    F = np.empty_like(U)
    F[..., RHO] = U[..., MX]
    F[..., MX] = U[..., MX] * u + pt - b1 * b1
    F[..., MY] = U[..., MX] * v - b1 * b2
    F[..., MZ] = U[..., MX] * w - b1 * b3
    F[..., B1] = 0.0
    F[..., B2] = u * b2 - v * b1
    F[..., B3] = u * b3 - w * b1
    F[..., EN] = (U[..., EN] + pt) * u - ub * b1
    return F


def flux_y(U, g: GasModel):
    """Physical y-flux G(U); the b2 slot is identically zero."""
    U = np.asarray(U, dtype=np.float64)
    V = cons_to_prim(U, g)
    u, v, w = V[..., VU], V[..., VV], V[..., VW]
    b1, b2, b3 = U[..., B1], U[..., B2], U[..., B3]
    pt = V[..., VP] + 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    ub = u * b1 + v * b2 + w * b3
    G = np.empty_like(U)
    G[..., RHO] = U[..., MY]
    G[..., MX] = U[..., MY] * u - b1 * b2
    G[..., MY] = U[..., MY] * v + pt - b2 * b2
    G[..., MZ] = U[..., MY] * w - b2 * b3
    G[..., B1] = v * b1 - u * b2
    G[..., B2] = 0.0
    G[..., B3] = v * b3 - w * b2
    G[..., EN] = (U[..., EN] + pt) * v - ub * b2
    return G


def godunov_powell_q(U):
    """The source vector q = -(0, b1, b2, b3, u, v, w, u.b).

    The nonconservative products are the rank-one matrices q e5^T (x) and
    q e6^T (y), acting on the b1 and b2 slopes respectively.
    """
    U = np.asarray(U, dtype=np.float64)
    rho = U[..., RHO]
    u, v, w = U[..., MX] / rho, U[..., MY] / rho, U[..., MZ] / rho
    b1, b2, b3 = U[..., B1], U[..., B2], U[..., B3]
    q = np.empty_like(U)
    q[..., 0] = 0.0
    q[..., 1] = -b1
    q[..., 2] = -b2
    q[..., 3] = -b3
    q[..., 4] = -u
    q[..., 5] = -v
    q[..., 6] = -w
    q[..., 7] = -(u * b1 + v * b2 + w * b3)
    return q


def aux_flux_x(V, ab, uy):
    """x-flux of the auxiliary pair: (u A - b2 u_y, u B + b2 u_y)."""
    V = np.asarray(V, dtype=np.float64)
    ab = np.asarray(ab, dtype=np.float64)
    u, b2 = V[..., VU], V[..., VB2]
    out = np.empty_like(ab)
    out[..., 0] = u * ab[..., 0] - b2 * uy
    out[..., 1] = u * ab[..., 1] + b2 * uy
    return out


def aux_flux_y(V, ab, vx):
    """y-flux of the auxiliary pair: (v A + b1 v_x, v B - b1 v_x)."""
    V = np.asarray(V, dtype=np.float64)
    ab = np.asarray(ab, dtype=np.float64)
    v, b1 = V[..., VV], V[..., VB1]
    out = np.empty_like(ab)
    out[..., 0] = v * ab[..., 0] + b1 * vx
    out[..., 1] = v * ab[..., 1] - b1 * vx
    return out


def swap_xy_cons(U):
    """Exchange the x/y roles of a conservative state (mx<->my, b1<->b2)."""
    return np.asarray(U)[..., _SWAP_CONS]


def swap_xy_prim(V):
    """Exchange the x/y roles of a primitive state (u<->v, b1<->b2)."""
    return np.asarray(V)[..., _SWAP_PRIM]
