"""Path-integral bookkeeping for the nonconservative Godunov-Powell terms.

The source terms q e5^T U_x and q e6^T U_y are folded into global fluxes
K = F - I^x and L = G - I^y, where I^x, I^y are running integrals of the
source contributions, accumulated recursively along rows (x) and columns
(y) from an arbitrary anchor at the first interface.  Cell contributions
use midpoint quadrature of the in-cell b1 (or b2) variation; interface
contributions use a linear path through the two face states.
"""
from __future__ import annotations

import numpy as np

from .state import godunov_powell_q


def cell_q_x(U_bar, b1_east, b1_west):
    """In-cell contribution q(U_bar) * (b1^E - b1^W)."""
    return godunov_powell_q(U_bar) * np.asarray(b1_east - b1_west)[..., None]


def cell_q_y(U_bar, b2_north, b2_south):
    """In-cell contribution q(U_bar) * (b2^N - b2^S)."""
    return godunov_powell_q(U_bar) * np.asarray(b2_north - b2_south)[..., None]


def interface_q_x(U_east, U_west):
    """Across-interface contribution along a linear path (midpoint rule).

    U_east is the east value of the left cell, U_west the west value of the
    right cell; the jump multiplies only the b1 slot of the path.
    """
    U_east = np.asarray(U_east, dtype=np.float64)
    U_west = np.asarray(U_west, dtype=np.float64)
    mid = 0.5 * (U_east + U_west)
    from .state import B1
    return godunov_powell_q(mid) * (U_west[..., B1] - U_east[..., B1])[..., None]


def interface_q_y(U_north, U_south):
    """y-direction analogue; the jump multiplies the b2 slot."""
    U_north = np.asarray(U_north, dtype=np.float64)
    U_south = np.asarray(U_south, dtype=np.float64)
    mid = 0.5 * (U_north + U_south)
    from .state import B2
    return godunov_powell_q(mid) * (U_south[..., B2] - U_north[..., B2])[..., None]


def integrate_globals_row(q_cells, q_ifaces, axis=0):
    """Two-sided running integrals I^- and I^+ at every interface of a line.

    With n cells along `axis`, q_cells has n entries and q_ifaces n+1 (the
    two boundary interfaces included).  Anchored at zero on the minus side
    of the first interface:

        I^-[0] = 0,  I^+[m] = I^-[m] + q_ifaces[m],
        I^-[m+1] = I^+[m] + q_cells[m].

    Returns (I_minus, I_plus), each with n+1 entries along `axis`.
    """
    q_cells = np.asarray(q_cells, dtype=np.float64)
    q_ifaces = np.asarray(q_ifaces, dtype=np.float64)
    axis = axis % q_ifaces.ndim
    n = q_cells.shape[axis]
    if q_ifaces.shape[axis] != n + 1:
        raise ValueError("need one interface term per interface (n+1 of them)")
    head = [slice(None)] * q_ifaces.ndim
    head[axis] = slice(0, n)
    inc = q_ifaces[tuple(head)] + q_cells
    zshape = list(q_ifaces.shape)
    zshape[axis] = 1
    I_minus = np.concatenate([np.zeros(zshape), np.cumsum(inc, axis=axis)], axis=axis)
    return I_minus, I_minus + q_ifaces


def global_flux_faces(F_east, F_west, I_minus, I_plus):
    """One-sided global fluxes at each interface: K^E = F^E - I^-, K^W = F^W - I^+.

    All arguments are interface-aligned: index m carries the east value of
    the cell left of interface m and the west value of the cell right of it.
    """
    return F_east - I_minus, F_west - I_plus
