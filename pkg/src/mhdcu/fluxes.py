"""Interface numerical fluxes: per-wave upwind (LCD), scalar central-upwind,
and the two-component central-upwind flux for the auxiliary fields."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .eigensystem import EigenSystem, eigenvalues_cons
from .state import GasModel

DEFAULT_EPS = 1e-8


class LocalSpeeds(NamedTuple):
    """Scalar one-sided propagation speeds at one interface (s_plus >= 0 >= s_minus)."""

    s_plus: np.ndarray
    s_minus: np.ndarray


@dataclass(frozen=True)
class SpectralBounds:
    """Per-wave one-sided eigenvalue bounds, desingularized away from zero."""

    lam_plus: np.ndarray
    lam_minus: np.ndarray
    eps: float

    def diagonals(self):
        """(P, M, Q) diagonal entries; P + M = 1 holds exactly."""
        span = self.lam_plus - self.lam_minus
        P = self.lam_plus / span
        return P, 1.0 - P, self.lam_plus * self.lam_minus / span


def spectral_bounds(U_east, U_west, g: GasModel, direction="x", eps=DEFAULT_EPS) -> SpectralBounds:
    """Wave-by-wave max/min of the eigenvalues at the two face states."""
    lam_e = eigenvalues_cons(U_east, g, direction)
    lam_w = eigenvalues_cons(U_west, g, direction)
    lam_plus = np.maximum(np.maximum(lam_e, lam_w), eps)
    lam_minus = np.minimum(np.minimum(lam_e, lam_w), -eps)
    return SpectralBounds(lam_plus, lam_minus, eps)


def local_speeds(U_east, U_west, g: GasModel, direction="x") -> LocalSpeeds:
    """Extremal-eigenvalue speed estimate, clamped at zero."""
    lam_e = eigenvalues_cons(U_east, g, direction)
    lam_w = eigenvalues_cons(U_west, g, direction)
    s_plus = np.maximum(np.maximum(lam_e[..., 7], lam_w[..., 7]), 0.0)
    s_minus = np.minimum(np.minimum(lam_e[..., 0], lam_w[..., 0]), 0.0)
    return LocalSpeeds(s_plus, s_minus)


def _mv(A, x):
    return np.einsum("...ij,...j->...i", A, x)


def lcd_flux(K_east, K_west, U_east, U_west, eigsys: EigenSystem,
             bounds: SpectralBounds):
    """Per-wave upwind combination R P L K^E + R M L K^W + R Q L (U^W - U^E)."""
    P, M, Q = bounds.diagonals()
    z = (P * _mv(eigsys.left, K_east)
         + M * _mv(eigsys.left, K_west)
         + Q * _mv(eigsys.left, np.asarray(U_west) - np.asarray(U_east)))
    return _mv(eigsys.right, z)


def cu_flux(f_east, f_west, u_east, u_west, speeds: LocalSpeeds):
    """Scalar-speed central-upwind flux with a zero-span consistency fallback."""
    f_east = np.asarray(f_east, dtype=np.float64)
    f_west = np.asarray(f_west, dtype=np.float64)
    sp = np.asarray(speeds.s_plus, dtype=np.float64)[..., None]
    sm = np.asarray(speeds.s_minus, dtype=np.float64)[..., None]
    span = sp - sm
    tiny = span < 1e-14
    safe = np.where(tiny, 1.0, span)
    flux = (sp * f_east - sm * f_west) / safe \
        + sp * sm / safe * (np.asarray(u_west) - np.asarray(u_east))
    return np.where(tiny, 0.5 * (f_east + f_west), flux)


def pccu_flux(K_east, K_west, U_east, U_west, speeds: LocalSpeeds):
    """Baseline flux: one pair of speeds applied to all eight waves."""
    return cu_flux(K_east, K_west, U_east, U_west, speeds)


def cu_aux_flux(f_east, f_west, aux_east, aux_west, speeds: LocalSpeeds):
    """Central-upwind flux for the two-component auxiliary subsystem."""
    return cu_flux(f_east, f_west, aux_east, aux_west, speeds)
