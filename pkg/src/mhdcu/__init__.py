"""Locally divergence-free central-upwind finite-volume solver for 2-D ideal MHD.

The eight-wave (Godunov-Powell) system is augmented with evolution
equations for A = (b1)_x and B = (b2)_y; reconstruction of the magnetic
point values is corrected with those averages so the per-cell discrete
divergence vanishes identically for divergence-free data.  Interface
fluxes are global (path-integral-corrected) fluxes upwinded wave-by-wave
in the local characteristic basis, with a scalar central-upwind baseline
for comparisons.
"""
from .errors import AdmissibilityError, MhdError, UnstableRunError
from .problems import ProblemSpec, alfven_exact, problem, problem_names
from .solver import (BoundaryCondition, Diagnostics, Grid2D, RunResult,
                     SchemeVariant, SolverConfig, rhs, run)
from .state import GasModel, cons_to_prim, prim_to_cons
from .timestepping import TimeControls

__all__ = [
    "AdmissibilityError", "BoundaryCondition", "Diagnostics", "GasModel",
    "Grid2D", "MhdError", "ProblemSpec", "RunResult", "SchemeVariant",
    "SolverConfig", "TimeControls", "UnstableRunError", "alfven_exact",
    "cons_to_prim", "prim_to_cons", "problem", "problem_names", "rhs", "run",
]

__version__ = "0.1.0"
