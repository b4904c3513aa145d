"""The two stress benchmarks: the spinning-disk problem and the strong blast.

Coarse runs that exercise torsional Alfven waves (rotor) and near-vacuum
pressures behind strong magnetosonic shocks (blast).  Use --floor to keep
the blast running at resolutions where positivity is marginal.
"""
import argparse

from mhdcu import (AdmissibilityError, SchemeVariant, SolverConfig, TimeControls,
                   cons_to_prim, problem, run)
from mhdcu import state as st


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--floor", action="store_true")
    args = ap.parse_args()

    for name in ("rotor", "blast"):
        spec = problem(name)
        grid = spec.grid(args.n, args.n)
        cfg = SolverConfig(theta=spec.theta, floor=args.floor)
        try:
            res = run(spec.initial_field(grid), grid, spec.bc, spec.gas(),
                      TimeControls(t_final=spec.t_final),
                      variant=SchemeVariant.LCD_PCCU, cfg=cfg)
        except AdmissibilityError as e:
            print(f"{name} {args.n}^2: positivity lost ({e}); rerun with --floor "
                  f"or a finer mesh")
            continue
        V = cons_to_prim(res.w[..., :8], spec.gas())
        d = res.diagnostics.as_arrays()
        print(f"{name} {args.n}^2 to t={spec.t_final} (theta={spec.theta}): "
              f"{res.steps} steps")
        print(f"  rho in [{V[..., st.VRHO].min():.4f}, {V[..., st.VRHO].max():.4f}], "
              f"p in [{V[..., st.VP].min():.4f}, {V[..., st.VP].max():.4f}]")
        print(f"  max divergence Linf over run: {d['div_linf'].max():.3e}")


if __name__ == "__main__":
    main()
