"""Eigenstructure of the eight-wave quasi-linear MHD system.

The primitive-variable system V_t + D V_x = 0 has the classic
Roe-Balsara eigenvector basis, assembled here analytically with all
degenerate branches.  The conservative system U_t + C U_x = 0, where
C = dF/dU - q e5^T includes the Godunov-Powell rank-one term, is similar
to the primitive one through S = dU/dV, so its eigenvectors are obtained
as R = S T and L = T^{-1} S^{-1}.  This construction is exact (it is the
standard way the conservative MHD eigensystem is normalized) and is
validated by the inverse/residual/Jacobian test suite.

Directions: "x" or "y".  The y-direction system is the x-direction one
evaluated on the role-swapped state (u<->v, b1<->b2) with the u/v and
b1/b2 rows and columns exchanged.

All builders broadcast over leading axes; matrices have shape (..., 8, 8).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import state as st
from .errors import AdmissibilityError
from .state import GasModel

_SQRT1_2 = 1.0 / np.sqrt(2.0)
# row/column permutation realizing the x<->y component swap
_PERM_PRIM = np.array([0, 2, 1, 3, 4, 6, 5, 7])
_PERM_CONS = np.array([0, 2, 1, 3, 5, 4, 6, 7])


class WaveSpeeds(NamedTuple):
    """Sound, Alfven, fast, and slow magnetosonic speeds (0 <= cs <= ca <= cf)."""

    c: np.ndarray
    ca: np.ndarray
    cf: np.ndarray
    cs: np.ndarray


def _check_direction(direction):
    if direction not in ("x", "y"):
        raise ValueError(f"direction must be 'x' or 'y', got {direction!r}")


def wave_speeds(V, g: GasModel, direction="x") -> WaveSpeeds:
    """Characteristic speeds of the state V with b_N = b1 (x) or b2 (y)."""
    _check_direction(direction)
    V = np.asarray(V, dtype=np.float64)
    rho = V[..., st.VRHO]
    p = V[..., st.VP]
    if np.any(~(rho > 0.0)):
        raise AdmissibilityError("rho", float(np.min(rho)))
    if np.any(p < 0.0):
        raise AdmissibilityError("p", float(np.min(p)))
    bn = V[..., st.VB1] if direction == "x" else V[..., st.VB2]
    b1, b2, b3 = V[..., st.VB1], V[..., st.VB2], V[..., st.VB3]
    c2 = g.gamma * p / rho
    bsq = (b1 * b1 + b2 * b2 + b3 * b3) / rho
    bn2 = bn * bn / rho
    # discriminant written to avoid cancellation: (c^2-|b|^2/rho)^2 + 4 c^2 b_perp^2/rho
    disc = np.sqrt((c2 - bsq) ** 2 + 4.0 * c2 * (bsq - bn2))
    cf2 = 0.5 * (c2 + bsq + disc)
    # slow speed from the product of roots cf^2 cs^2 = c^2 b_N^2 / rho
    with np.errstate(invalid="ignore", divide="ignore"):
        cs2 = np.where(cf2 > 0.0, c2 * bn2 / np.where(cf2 > 0.0, cf2, 1.0), 0.0)
    return WaveSpeeds(np.sqrt(c2), np.sqrt(bn2), np.sqrt(cf2), np.sqrt(cs2))


def _lambdas(un, ws: WaveSpeeds):
    lam = np.empty(np.shape(un) + (8,), dtype=np.float64)
    lam[..., 0] = un - ws.cf
    lam[..., 1] = un - ws.ca
    lam[..., 2] = un - ws.cs
    lam[..., 3] = un
    lam[..., 4] = un
    lam[..., 5] = un + ws.cs
    lam[..., 6] = un + ws.ca
    lam[..., 7] = un + ws.cf
    return lam


def eigenvalues_prim(V, g: GasModel, direction="x"):
    """The eight eigenvalues u_N -/+ {cf, ca, cs, 0}, ascending."""
    V = np.asarray(V, dtype=np.float64)
    un = V[..., st.VU] if direction == "x" else V[..., st.VV]
    return _lambdas(un, wave_speeds(V, g, direction))


def eigenvalues_cons(U, g: GasModel, direction="x"):
    """Same spectrum as the primitive system, from a conservative state."""
    return eigenvalues_prim(st.cons_to_prim(U, g), g, direction)


def _transverse_basis(bn, bt, b3):
    """(beta1, beta2, beta3): sign of b_N and the unit transverse direction."""
    beta1 = np.where(bn >= 0.0, 1.0, -1.0)
    bperp = np.hypot(bt, b3)
    safe = np.where(bperp > 0.0, bperp, 1.0)
    beta2 = np.where(bperp > 0.0, bt / safe, _SQRT1_2)
    beta3 = np.where(bperp > 0.0, b3 / safe, _SQRT1_2)
    return beta1, beta2, beta3


def _alpha_fs(c2, cf2, cs2):
    """Fast/slow normalization weights with the umbilic branch.

    The generic formulas degenerate only when cf = cs (b_perp = 0 and
    c = c_a); there any unit pair is admissible and (1/sqrt2, 1/sqrt2)
    is used.  At b_perp = 0 with c != c_a they reduce to (1,0) or (0,1),
    which keeps the basis an exact eigenbasis in the hydrodynamic and
    field-dominated limits.
    """
    den = cf2 - cs2
    regular = den > 1e-12 * (cf2 + cs2)
    safe = np.where(regular, den, 1.0)
    af = np.where(regular, np.sqrt(np.clip(c2 - cs2, 0.0, None) / safe), _SQRT1_2)
    a_s = np.where(regular, np.sqrt(np.clip(cf2 - c2, 0.0, None) / safe), _SQRT1_2)
    return af, a_s


def _prim_eig_x(V, g: GasModel):
    """T, T^{-1}, lambdas for the x-direction primitive system."""
    V = np.asarray(V, dtype=np.float64)
    rho = V[..., st.VRHO]
    u = V[..., st.VU]
    ws = wave_speeds(V, g, "x")
    c, ca, cf, cs = ws
    c2, cf2, cs2 = c * c, cf * cf, cs * cs
    beta1, beta2, beta3 = _transverse_basis(V[..., st.VB1], V[..., st.VB2], V[..., st.VB3])
    af, a_s = _alpha_fs(c2, cf2, cs2)
    sq = np.sqrt(rho)

    shape = rho.shape + (8, 8)
    T = np.zeros(shape, dtype=np.float64)
    Ti = np.zeros(shape, dtype=np.float64)

    # fast pair (columns 0 and 7; upper sign belongs to u - cf)
    for col, s in ((0, 1.0), (7, -1.0)):
        T[..., st.VRHO, col] = af * rho
        T[..., st.VU, col] = -s * af * cf
        T[..., st.VV, col] = s * a_s * cs * beta1 * beta2
        T[..., st.VW, col] = s * a_s * cs * beta1 * beta3
        T[..., st.VP, col] = af * rho * c2
        T[..., st.VB2, col] = a_s * sq * c * beta2
        T[..., st.VB3, col] = a_s * sq * c * beta3
        Ti[..., col, st.VU] = -s * af * cf / (2.0 * c2)
        Ti[..., col, st.VV] = s * a_s * cs * beta1 * beta2 / (2.0 * c2)
        Ti[..., col, st.VW] = s * a_s * cs * beta1 * beta3 / (2.0 * c2)
        Ti[..., col, st.VP] = af / (2.0 * c2 * rho)
        Ti[..., col, st.VB2] = a_s * c * beta2 / (2.0 * c2 * sq)
        Ti[..., col, st.VB3] = a_s * c * beta3 / (2.0 * c2 * sq)
    # Alfven pair (columns 1 and 6)
    for col, s in ((1, 1.0), (6, -1.0)):
        T[..., st.VV, col] = -s * beta3
        T[..., st.VW, col] = s * beta2
        T[..., st.VB2, col] = -sq * beta1 * beta3
        T[..., st.VB3, col] = sq * beta1 * beta2
        Ti[..., col, st.VV] = -s * 0.5 * beta3
        Ti[..., col, st.VW] = s * 0.5 * beta2
        Ti[..., col, st.VB2] = -0.5 * beta1 * beta3 / sq
        Ti[..., col, st.VB3] = 0.5 * beta1 * beta2 / sq
    # slow pair (columns 2 and 5)
    for col, s in ((2, 1.0), (5, -1.0)):
        T[..., st.VRHO, col] = a_s * rho
        T[..., st.VU, col] = -s * a_s * cs
        T[..., st.VV, col] = -s * af * cf * beta1 * beta2
        T[..., st.VW, col] = -s * af * cf * beta1 * beta3
        T[..., st.VP, col] = a_s * rho * c2
        T[..., st.VB2, col] = -af * sq * c * beta2
        T[..., st.VB3, col] = -af * sq * c * beta3
        Ti[..., col, st.VU] = -s * a_s * cs / (2.0 * c2)
        Ti[..., col, st.VV] = -s * af * cf * beta1 * beta2 / (2.0 * c2)
        Ti[..., col, st.VW] = -s * af * cf * beta1 * beta3 / (2.0 * c2)
        Ti[..., col, st.VP] = a_s / (2.0 * c2 * rho)
        Ti[..., col, st.VB2] = -af * c * beta2 / (2.0 * c2 * sq)
        Ti[..., col, st.VB3] = -af * c * beta3 / (2.0 * c2 * sq)
    # entropy wave (column 3) and the b_N wave (column 4)
    T[..., st.VRHO, 3] = 1.0
    T[..., st.VB1, 4] = 1.0
    Ti[..., 3, st.VRHO] = 1.0
    Ti[..., 3, st.VP] = -1.0 / c2
    Ti[..., 4, st.VB1] = 1.0

    return T, Ti, _lambdas(u, ws)


def prim_eig_matrices(V, g: GasModel, direction="x"):
    """(T, T^{-1}, lambdas) of the primitive quasi-linear system."""
    _check_direction(direction)
    if direction == "x":
        return _prim_eig_x(V, g)
    T, Ti, lam = _prim_eig_x(st.swap_xy_prim(V), g)
    return T[..., _PERM_PRIM, :], Ti[..., :, _PERM_PRIM], lam


def state_jacobian(V, g: GasModel):
    """S = dU/dV for U = (rho, rho u, rho v, rho w, b, E), V = (rho, u, p, b)."""
    V = np.asarray(V, dtype=np.float64)
    rho, u, v, w = (V[..., i] for i in (st.VRHO, st.VU, st.VV, st.VW))
    b1, b2, b3 = V[..., st.VB1], V[..., st.VB2], V[..., st.VB3]
    S = np.zeros(rho.shape + (8, 8), dtype=np.float64)
    S[..., st.RHO, st.VRHO] = 1.0
    S[..., st.MX, st.VRHO] = u
    S[..., st.MX, st.VU] = rho
    S[..., st.MY, st.VRHO] = v
    S[..., st.MY, st.VV] = rho
    S[..., st.MZ, st.VRHO] = w
    S[..., st.MZ, st.VW] = rho
    S[..., st.B1, st.VB1] = 1.0
    S[..., st.B2, st.VB2] = 1.0
    S[..., st.B3, st.VB3] = 1.0
    S[..., st.EN, st.VRHO] = 0.5 * (u * u + v * v + w * w)
    S[..., st.EN, st.VU] = rho * u
    S[..., st.EN, st.VV] = rho * v
    S[..., st.EN, st.VW] = rho * w
    S[..., st.EN, st.VP] = 1.0 / (g.gamma - 1.0)
    S[..., st.EN, st.VB1] = b1
    S[..., st.EN, st.VB2] = b2
    S[..., st.EN, st.VB3] = b3
    return S


def state_jacobian_inv(V, g: GasModel):
    """Analytic inverse of dU/dV."""
    V = np.asarray(V, dtype=np.float64)
    rho, u, v, w = (V[..., i] for i in (st.VRHO, st.VU, st.VV, st.VW))
    b1, b2, b3 = V[..., st.VB1], V[..., st.VB2], V[..., st.VB3]
    gm1 = g.gamma - 1.0
    Si = np.zeros(rho.shape + (8, 8), dtype=np.float64)
    Si[..., st.VRHO, st.RHO] = 1.0
    Si[..., st.VU, st.RHO] = -u / rho
    Si[..., st.VU, st.MX] = 1.0 / rho
    Si[..., st.VV, st.RHO] = -v / rho
    Si[..., st.VV, st.MY] = 1.0 / rho
    Si[..., st.VW, st.RHO] = -w / rho
    Si[..., st.VW, st.MZ] = 1.0 / rho
    Si[..., st.VP, st.RHO] = 0.5 * gm1 * (u * u + v * v + w * w)
    Si[..., st.VP, st.MX] = -gm1 * u
    Si[..., st.VP, st.MY] = -gm1 * v
    Si[..., st.VP, st.MZ] = -gm1 * w
    Si[..., st.VP, st.B1] = -gm1 * b1
    Si[..., st.VP, st.B2] = -gm1 * b2
    Si[..., st.VP, st.B3] = -gm1 * b3
    Si[..., st.VP, st.EN] = gm1
    Si[..., st.VB1, st.B1] = 1.0
    Si[..., st.VB2, st.B2] = 1.0
    Si[..., st.VB3, st.B3] = 1.0
    return Si


def quasilinear_matrix_prim(V, g: GasModel, direction="x"):
    """The primitive-variable coefficient matrix D^x or D^y."""
    _check_direction(direction)
    V = np.asarray(V, dtype=np.float64)
    if direction == "y":
        Dx = quasilinear_matrix_prim(st.swap_xy_prim(V), g, "x")
        return Dx[..., _PERM_PRIM, :][..., :, _PERM_PRIM]
    rho, u = V[..., st.VRHO], V[..., st.VU]
    p = V[..., st.VP]
    b1, b2, b3 = V[..., st.VB1], V[..., st.VB2], V[..., st.VB3]
    D = np.zeros(rho.shape + (8, 8), dtype=np.float64)
    for i in range(8):
        D[..., i, i] = u
    D[..., st.VRHO, st.VU] = rho
    D[..., st.VU, st.VP] = 1.0 / rho
    D[..., st.VU, st.VB2] = b2 / rho
    D[..., st.VU, st.VB3] = b3 / rho
    D[..., st.VV, st.VB2] = -b1 / rho
    D[..., st.VW, st.VB3] = -b1 / rho
    D[..., st.VP, st.VU] = g.gamma * p
    D[..., st.VB2, st.VU] = b2
    D[..., st.VB2, st.VV] = -b1
    D[..., st.VB3, st.VU] = b3
    D[..., st.VB3, st.VW] = -b1
    return D


def quasilinear_matrix_cons(U, g: GasModel, direction="x"):
    """C = dF/dU - Q^x (resp. dG/dU - Q^y) via similarity with the primitive system."""
    V = st.cons_to_prim(U, g)
    D = quasilinear_matrix_prim(V, g, direction)
    S = state_jacobian(V, g)
    Si = state_jacobian_inv(V, g)
    return S @ D @ Si


@dataclass(frozen=True)
class EigenSystem:
    """Right/left eigenvector matrices of the conservative system; left @ right = I."""

    lambdas: np.ndarray
    right: np.ndarray
    left: np.ndarray
    direction: str


@dataclass(frozen=True)
class PrimEigenSystem:
    """Characteristic transform T and its inverse for the primitive system."""

    lambdas: np.ndarray
    transform: np.ndarray
    inverse_transform: np.ndarray
    direction: str


def eigensystem_prim(V, g: GasModel, direction="x") -> PrimEigenSystem:
    T, Ti, lam = prim_eig_matrices(V, g, direction)
    return PrimEigenSystem(lam, T, Ti, direction)


def eigensystem_cons(U, g: GasModel, direction="x") -> EigenSystem:
    V = st.cons_to_prim(U, g)
    T, Ti, lam = prim_eig_matrices(V, g, direction)
    R = state_jacobian(V, g) @ T
    L = Ti @ state_jacobian_inv(V, g)
    return EigenSystem(lam, R, L, direction)
