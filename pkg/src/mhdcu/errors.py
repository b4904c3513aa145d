"""Exception types shared across the solver."""


class MhdError(Exception):
    """Base class for solver errors."""


class AdmissibilityError(MhdError):
    """A state violates positivity (rho <= 0, p <= 0, or non-finite values).

    Carries the offending value and, when known, the (j, k) cell location.
    """

    def __init__(self, what, value, location=None):
        self.what = what
        self.value = value
        self.location = location
        loc = f" at cell {location}" if location is not None else ""
        super().__init__(f"inadmissible state: {what} = {value!r}{loc}")


class UnstableRunError(MhdError):
    """The adaptive time step collapsed below the configured minimum."""

    def __init__(self, dt, dt_min, t):
        self.dt = dt
        self.dt_min = dt_min
        self.t = t
        super().__init__(f"time step {dt:.3e} fell below dt_min={dt_min:.3e} at t={t:.6g}")
