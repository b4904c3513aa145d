"""Shared helpers for the test suite: random admissible states and FD oracles."""
import numpy as np

from mhdcu.state import GasModel, prim_to_cons


def random_prim(rng, n=1, p_range=(-2.0, 2.0), vel=3.0, bmag=4.0):
    """Random admissible primitive states, shape (n, 8)."""
    V = np.empty((n, 8))
    V[:, 0] = rng.uniform(0.1, 5.0, n)
    V[:, 1:4] = rng.uniform(-vel, vel, (n, 3))
    V[:, 4] = 10.0 ** rng.uniform(*p_range, n)
    V[:, 5:8] = rng.uniform(-bmag, bmag, (n, 3))
    return V


def random_cons(rng, g: GasModel, n=1, **kw):
    return prim_to_cons(random_prim(rng, n, **kw), g)


def fd_jacobian(f, U, rel_step=1e-7):
    """Central-difference Jacobian of f at the single state U (shape (8,))."""
    U = np.asarray(U, dtype=np.float64)
    J = np.zeros((8, 8))
    for j in range(8):
        h = rel_step * max(abs(U[j]), 1.0)
        Up, Um = U.copy(), U.copy()
        Up[j] += h
        Um[j] -= h
        J[:, j] = (f(Up) - f(Um)) / (2.0 * h)
    return J
