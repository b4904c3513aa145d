"""Three-stage SSP Runge-Kutta integration with CFL-limited adaptive steps."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnstableRunError


@dataclass(frozen=True)
class TimeControls:
    """Run horizon and step-size policy."""

    t_final: float
    cfl: float = 0.25
    dt_min: float = 1e-13

    def __post_init__(self):
        if not 0.0 < self.cfl < 1.0:
            raise ValueError(f"cfl must lie in (0, 1), got {self.cfl}")


def ssp_rk3_step(y, rhs, dt, first_eval=None):
    """One Shu-Osher SSP-RK3 step y -> y(t + dt).

    `rhs` maps a state to its time derivative; `first_eval` may pass a
    precomputed rhs(y) (the stage used for the CFL estimate) to avoid a
    fourth evaluation per step.
    """
    k1 = rhs(y) if first_eval is None else first_eval
    y1 = y + dt * k1
    y2 = 0.75 * y + 0.25 * (y1 + dt * rhs(y1))
    return y / 3.0 + (2.0 / 3.0) * (y2 + dt * rhs(y2))


def compute_dt(dx, dy, a_x, a_y, cfl, t_remaining=None, dt_min=0.0, t=0.0):
    """CFL step from the largest one-sided speeds per direction.

    The raw step cfl * min(dx/a_x, dy/a_y) is clipped to land exactly on
    the remaining time; collapse below dt_min (before clipping) raises
    UnstableRunError.
    """
    a_x = max(float(a_x), 0.0)
    a_y = max(float(a_y), 0.0)
    if a_x == 0.0 and a_y == 0.0:
        dt = float("inf") if t_remaining is None else float(t_remaining)
        return dt
    limits = []
    if a_x > 0.0:
        limits.append(dx / a_x)
    if a_y > 0.0:
        limits.append(dy / a_y)
    dt = cfl * min(limits)
    if dt < dt_min:
        raise UnstableRunError(dt, dt_min, t)
    if t_remaining is not None:
        dt = min(dt, float(t_remaining))
    return dt
