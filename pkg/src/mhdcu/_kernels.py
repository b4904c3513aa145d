"""Scalar per-interface kernels, JIT-compiled with numba.

These mirror the vectorized reference operations in `eigensystem`,
`reconstruction`, and `fluxes` for the two hot sweeps of the right-hand
side (characteristic reconstruction and the per-wave upwind flux); the
test suite pins kernel outputs against the reference modules.

Everything here works in a single "normal = x" frame; the caller handles
the y-direction by swapping the field.  No fastmath: summation order is
part of the contract (bitwise-reproducible sweeps).
"""
import numba as nb
import numpy as np

SQRT1_2 = 1.0 / np.sqrt(2.0)


@nb.njit(cache=True, inline="always")
def _prim8(U, g, V):
    rho = U[0]
    V[0] = rho
    V[1] = U[1] / rho
    V[2] = U[2] / rho
    V[3] = U[3] / rho
    ke = 0.5 * (U[1] * V[1] + U[2] * V[2] + U[3] * V[3])
    mag = 0.5 * (U[4] * U[4] + U[5] * U[5] + U[6] * U[6])
    V[4] = (g - 1.0) * (U[7] - ke - mag)
    V[5] = U[4]
    V[6] = U[5]
    V[7] = U[6]


@nb.njit(cache=True, inline="always")
def _speeds(rho, p, b1, b2, b3, g):
    """(c^2, c_a, c_f, c_s) with b1 as the normal component."""
    c2 = g * p / rho
    bsq = (b1 * b1 + b2 * b2 + b3 * b3) / rho
    bn2 = b1 * b1 / rho
    d = c2 - bsq
    disc = np.sqrt(d * d + 4.0 * c2 * (bsq - bn2))
    cf2 = 0.5 * (c2 + bsq + disc)
    cs2 = c2 * bn2 / cf2 if cf2 > 0.0 else 0.0
    return c2, np.sqrt(bn2), np.sqrt(cf2), np.sqrt(cs2)


@nb.njit(cache=True, inline="always")
def _mm3(a, b, c):
    if a > 0.0 and b > 0.0 and c > 0.0:
        return min(a, min(b, c))
    if a < 0.0 and b < 0.0 and c < 0.0:
        return max(a, max(b, c))
    return 0.0


@nb.njit(cache=True)
def _fill_T_Ti(V, g, T, Ti):
    """Right/left characteristic transforms of the primitive x-system."""
    rho = V[0]
    p = V[4]
    b1, b2, b3 = V[5], V[6], V[7]
    c2, ca, cf, cs = _speeds(rho, p, b1, b2, b3, g)
    c = np.sqrt(c2)
    cf2, cs2 = cf * cf, cs * cs

    beta1 = 1.0 if b1 >= 0.0 else -1.0
    bperp = np.hypot(b2, b3)
    if bperp > 0.0:
        beta2, beta3 = b2 / bperp, b3 / bperp
    else:
        beta2 = beta3 = SQRT1_2
    den = cf2 - cs2
    if den > 1e-12 * (cf2 + cs2):
        af = np.sqrt(max(c2 - cs2, 0.0) / den)
        a_s = np.sqrt(max(cf2 - c2, 0.0) / den)
    else:
        af = a_s = SQRT1_2
    sq = np.sqrt(rho)

    T[:, :] = 0.0
    Ti[:, :] = 0.0
    half_c2 = 0.5 / c2
    for n in range(2):
        col = 0 if n == 0 else 7
        s = 1.0 if n == 0 else -1.0
        T[0, col] = af * rho
        T[1, col] = -s * af * cf
        T[2, col] = s * a_s * cs * beta1 * beta2
        T[3, col] = s * a_s * cs * beta1 * beta3
        T[4, col] = af * rho * c2
        T[6, col] = a_s * sq * c * beta2
        T[7, col] = a_s * sq * c * beta3
        Ti[col, 1] = -s * af * cf * half_c2
        Ti[col, 2] = s * a_s * cs * beta1 * beta2 * half_c2
        Ti[col, 3] = s * a_s * cs * beta1 * beta3 * half_c2
        Ti[col, 4] = af / rho * half_c2
        Ti[col, 6] = a_s * c * beta2 / sq * half_c2
        Ti[col, 7] = a_s * c * beta3 / sq * half_c2
    for n in range(2):
        col = 1 if n == 0 else 6
        s = 1.0 if n == 0 else -1.0
        T[2, col] = -s * beta3
        T[3, col] = s * beta2
        T[6, col] = -sq * beta1 * beta3
        T[7, col] = sq * beta1 * beta2
        Ti[col, 2] = -s * 0.5 * beta3
        Ti[col, 3] = s * 0.5 * beta2
        Ti[col, 6] = -0.5 * beta1 * beta3 / sq
        Ti[col, 7] = 0.5 * beta1 * beta2 / sq
    for n in range(2):
        col = 2 if n == 0 else 5
        s = 1.0 if n == 0 else -1.0
        T[0, col] = a_s * rho
        T[1, col] = -s * a_s * cs
        T[2, col] = -s * af * cf * beta1 * beta2
        T[3, col] = -s * af * cf * beta1 * beta3
        T[4, col] = a_s * rho * c2
        T[6, col] = -af * sq * c * beta2
        T[7, col] = -af * sq * c * beta3
        Ti[col, 1] = -s * a_s * cs * half_c2
        Ti[col, 2] = -s * af * cf * beta1 * beta2 * half_c2
        Ti[col, 3] = -s * af * cf * beta1 * beta3 * half_c2
        Ti[col, 4] = a_s / rho * half_c2
        Ti[col, 6] = -af * c * beta2 / sq * half_c2
        Ti[col, 7] = -af * c * beta3 / sq * half_c2
    T[0, 3] = 1.0
    T[5, 4] = 1.0
    Ti[3, 0] = 1.0
    Ti[3, 4] = -1.0 / c2
    Ti[4, 5] = 1.0


@nb.njit(cache=True, inline="always")
def _s_apply(V, g, z, out):
    """out = (dU/dV) z."""
    rho, u, v, w = V[0], V[1], V[2], V[3]
    b1, b2, b3 = V[5], V[6], V[7]
    out[0] = z[0]
    out[1] = u * z[0] + rho * z[1]
    out[2] = v * z[0] + rho * z[2]
    out[3] = w * z[0] + rho * z[3]
    out[4] = z[5]
    out[5] = z[6]
    out[6] = z[7]
    out[7] = (0.5 * (u * u + v * v + w * w) * z[0] + rho * (u * z[1] + v * z[2] + w * z[3])
              + z[4] / (g - 1.0) + b1 * z[5] + b2 * z[6] + b3 * z[7])


@nb.njit(cache=True, inline="always")
def _sinv_apply(V, g, x, out):
    """out = (dU/dV)^{-1} x."""
    rho, u, v, w = V[0], V[1], V[2], V[3]
    b1, b2, b3 = V[5], V[6], V[7]
    gm1 = g - 1.0
    out[0] = x[0]
    out[1] = (x[1] - u * x[0]) / rho
    out[2] = (x[2] - v * x[0]) / rho
    out[3] = (x[3] - w * x[0]) / rho
    out[4] = gm1 * (0.5 * (u * u + v * v + w * w) * x[0]
                    - u * x[1] - v * x[2] - w * x[3]
                    - b1 * x[4] - b2 * x[5] - b3 * x[6] + x[7])
    out[5] = x[4]
    out[6] = x[5]
    out[7] = x[6]


@nb.njit(cache=True, parallel=True)
def recon_sweep(wg, vg, g, theta, dx, VE, VW):
    """Characteristic minmod reconstruction along the first axis.

    wg/vg: ghosted conservative (.., 10) and primitive (.., 8) cell fields.
    Writes, for each interface i between cells i-1 and i, the east value of
    the left cell into VE[i] and the west value of the right cell into
    VW[i+1]; VE/VW slot c+1 belongs to cell c in (-1 .. nx).
    """
    ni = VE.shape[0] - 1
    nr = VE.shape[1]
    for k in nb.prange(nr):
        T = np.empty((8, 8))
        Ti = np.empty((8, 8))
        Uh = np.empty(8)
        Vh = np.empty(8)
        gam = np.empty((4, 8))
        tmp = np.empty(8)
        ka = k + 2
        for i in range(ni):
            for c in range(8):
                Uh[c] = 0.5 * (wg[i + 1, ka, c] + wg[i + 2, ka, c])
            _prim8(Uh, g, Vh)
            _fill_T_Ti(Vh, g, T, Ti)
            for m in range(4):
                for r in range(8):
                    acc = 0.0
                    for c in range(8):
                        acc += Ti[r, c] * vg[i + m, ka, c]
                    gam[m, r] = acc
            for r in range(8):
                sE = _mm3(theta * (gam[2, r] - gam[1, r]) / dx,
                          (gam[2, r] - gam[0, r]) / (2.0 * dx),
                          theta * (gam[1, r] - gam[0, r]) / dx)
                tmp[r] = gam[1, r] + 0.5 * dx * sE
            for r in range(8):
                acc = 0.0
                for c in range(8):
                    acc += T[r, c] * tmp[c]
                VE[i, k, r] = acc
            for r in range(8):
                sW = _mm3(theta * (gam[3, r] - gam[2, r]) / dx,
                          (gam[3, r] - gam[1, r]) / (2.0 * dx),
                          theta * (gam[2, r] - gam[1, r]) / dx)
                tmp[r] = gam[2, r] - 0.5 * dx * sW
            for r in range(8):
                acc = 0.0
                for c in range(8):
                    acc += T[r, c] * tmp[c]
                VW[i + 1, k, r] = acc


@nb.njit(cache=True, inline="always")
def _lambdas8(V, g, lam):
    c2, ca, cf, cs = _speeds(V[0], V[4], V[5], V[6], V[7], g)
    u = V[1]
    lam[0] = u - cf
    lam[1] = u - ca
    lam[2] = u - cs
    lam[3] = u
    lam[4] = u
    lam[5] = u + cs
    lam[6] = u + ca
    lam[7] = u + cf


@nb.njit(cache=True, inline="always")
def _cons8(V, g, U):
    rho = V[0]
    U[0] = rho
    U[1] = rho * V[1]
    U[2] = rho * V[2]
    U[3] = rho * V[3]
    U[4] = V[5]
    U[5] = V[6]
    U[6] = V[7]
    ke = 0.5 * rho * (V[1] * V[1] + V[2] * V[2] + V[3] * V[3])
    mag = 0.5 * (V[5] * V[5] + V[6] * V[6] + V[7] * V[7])
    U[7] = V[4] / (g - 1.0) + ke + mag


@nb.njit(cache=True, inline="always")
def _flux8(V, U, F):
    """Normal physical flux from a matched primitive/conservative pair."""
    u, v, w = V[1], V[2], V[3]
    b1, b2, b3 = V[5], V[6], V[7]
    pt = V[4] + 0.5 * (b1 * b1 + b2 * b2 + b3 * b3)
    ub = u * b1 + v * b2 + w * b3
    F[0] = U[1]
    F[1] = U[1] * u + pt - b1 * b1
    F[2] = U[1] * v - b1 * b2
    F[3] = U[1] * w - b1 * b3
    F[4] = 0.0
    F[5] = u * b2 - v * b1
    F[6] = u * b3 - w * b1
    F[7] = (U[7] + pt) * u - ub * b1


@nb.njit(cache=True, inline="always")
def _gp_q8(U, scale, out):
    """out = q(U) * scale with q = -(0, b, u, u.b)."""
    rho = U[0]
    u, v, w = U[1] / rho, U[2] / rho, U[3] / rho
    out[0] = 0.0
    out[1] = -U[4] * scale
    out[2] = -U[5] * scale
    out[3] = -U[6] * scale
    out[4] = -u * scale
    out[5] = -v * scale
    out[6] = -w * scale
    out[7] = -(u * U[4] + v * U[5] + w * U[6]) * scale


@nb.njit(cache=True, parallel=True)
def flux_sweep(wg, VE, VW, AB_E, AB_W, shear, g, eps, per_wave, anchor,
               flux, aux, row_speed):
    """Global fluxes and auxiliary fluxes along the first axis.

    Per row: accumulates the nonconservative running integrals (anchored at
    zero on the first interface), forms the one-sided global fluxes
    K = F - I at each interface, and applies either the per-wave upwind
    combination (per_wave) or the scalar central-upwind formula.  The
    auxiliary (A, B) pair uses the scalar speeds in both variants.
    VE/VW/AB_E/AB_W use face-slot convention slot c+1 = cell c; shear holds
    the cross-derivative of the normal velocity at cells -1..nx.
    row_speed[k] returns the largest one-sided speed of the row.
    """
    ni = flux.shape[0]          # nx + 1 interfaces
    nr = flux.shape[1]
    for k in nb.prange(nr):
        T = np.empty((8, 8))
        Ti = np.empty((8, 8))
        Uh = np.empty(8)
        Vh = np.empty(8)
        UE = np.empty(8)
        UW = np.empty(8)
        KE = np.empty(8)
        KW = np.empty(8)
        lamE = np.empty(8)
        lamW = np.empty(8)
        Im = np.empty(8)
        for c in range(8):
            Im[c] = anchor[k, c]
        qterm = np.empty(8)
        w1 = np.empty(8)
        w2 = np.empty(8)
        zE = np.empty(8)
        zW = np.empty(8)
        zJ = np.empty(8)
        ka = k + 2
        amax = 0.0
        for i in range(ni):
            VEf = VE[i, k]
            VWf = VW[i + 1, k]
            _cons8(VEf, g, UE)
            _cons8(VWf, g, UW)
            _lambdas8(VEf, g, lamE)
            _lambdas8(VWf, g, lamW)
            sp = max(max(lamE[7], lamW[7]), 0.0)
            sm = min(min(lamE[0], lamW[0]), 0.0)
            if sp > amax:
                amax = sp
            if -sm > amax:
                amax = -sm
            # interface path contribution and the plus-side integral
            for c in range(8):
                Uh[c] = 0.5 * (UE[c] + UW[c])
            _gp_q8(Uh, UW[4] - UE[4], qterm)
            # one-sided global fluxes K = F - I
            _flux8(VEf, UE, KE)
            _flux8(VWf, UW, KW)
            for c in range(8):
                KE[c] -= Im[c]
                KW[c] -= Im[c] + qterm[c]
            if per_wave:
                for c in range(8):
                    Uh[c] = 0.5 * (wg[i + 1, ka, c] + wg[i + 2, ka, c])
                _prim8(Uh, g, Vh)
                _fill_T_Ti(Vh, g, T, Ti)
                _sinv_apply(Vh, g, KE, w1)
                for r in range(8):
                    acc = 0.0
                    for c in range(8):
                        acc += Ti[r, c] * w1[c]
                    zE[r] = acc
                _sinv_apply(Vh, g, KW, w1)
                for r in range(8):
                    acc = 0.0
                    for c in range(8):
                        acc += Ti[r, c] * w1[c]
                    zW[r] = acc
                for c in range(8):
                    w2[c] = UW[c] - UE[c]
                _sinv_apply(Vh, g, w2, w1)
                for r in range(8):
                    acc = 0.0
                    for c in range(8):
                        acc += Ti[r, c] * w1[c]
                    zJ[r] = acc
                for r in range(8):
                    lp = max(max(lamE[r], lamW[r]), eps)
                    lm = min(min(lamE[r], lamW[r]), -eps)
                    P = lp / (lp - lm)
                    w2[r] = P * zE[r] + (1.0 - P) * zW[r] \
                        + lp * lm / (lp - lm) * zJ[r]
                for r in range(8):
                    acc = 0.0
                    for c in range(8):
                        acc += T[r, c] * w2[c]
                    w1[r] = acc
                _s_apply(Vh, g, w1, flux[i, k])
            else:
                span = sp - sm
                if span < 1e-14:
                    for c in range(8):
                        flux[i, k, c] = 0.5 * (KE[c] + KW[c])
                else:
                    coef = sp * sm / span
                    for c in range(8):
                        flux[i, k, c] = (sp * KE[c] - sm * KW[c]) / span \
                            + coef * (UW[c] - UE[c])
            # auxiliary pair: central-upwind with the scalar speeds
            shf = 0.5 * (shear[i, k] + shear[i + 1, k])
            aE = AB_E[i, k, 0]
            bE = AB_E[i, k, 1]
            aW = AB_W[i + 1, k, 0]
            bW = AB_W[i + 1, k, 1]
            ftE0 = VEf[1] * aE - VEf[6] * shf
            ftE1 = VEf[1] * bE + VEf[6] * shf
            ftW0 = VWf[1] * aW - VWf[6] * shf
            ftW1 = VWf[1] * bW + VWf[6] * shf
            span = sp - sm
            if span < 1e-14:
                aux[i, k, 0] = 0.5 * (ftE0 + ftW0)
                aux[i, k, 1] = 0.5 * (ftE1 + ftW1)
            else:
                coef = sp * sm / span
                aux[i, k, 0] = (sp * ftE0 - sm * ftW0) / span + coef * (aW - aE)
                aux[i, k, 1] = (sp * ftE1 - sm * ftW1) / span + coef * (bW - bE)
            # advance the running integral into the next cell
            if i < ni - 1:
                for c in range(8):
                    Im[c] += qterm[c]
                _gp_q8(wg[i + 2, ka, :8], VE[i + 1, k, 5] - VW[i + 1, k, 5], qterm)
                for c in range(8):
                    Im[c] += qterm[c]
        row_speed[k] = amax
