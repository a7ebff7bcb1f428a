"""Pure-numpy builds of the hot kernels.

Same call signatures as _kernels_numba; selected via JACOBI_LT_BACKEND.
Vectorization is over quadrature nodes / contour samples, so loops here run
over the (short) period or support only.
"""

import numpy as np

_ULP = float(np.finfo(np.float64).eps)


# ---------------------------------------------------------------------------
# reflectionless densities and band moments
# ---------------------------------------------------------------------------

def refl_density(edges, gammas, ts):
    """Density of the reflectionless measure at points ts (band interiors).

    edges = (a1, b1, ..., aN, bN); gammas = N-1 gap parameters.
    """
    ts = np.asarray(ts, dtype=np.float64)
    n_bands = edges.shape[0] // 2
    w = 1.0 / (np.pi * np.sqrt(np.abs(ts - edges[0]) * np.abs(ts - edges[-1])))
    for j in range(n_bands - 1):
        w *= np.abs(ts - gammas[j]) / np.sqrt(
            np.abs(ts - edges[2 * j + 1]) * np.abs(ts - edges[2 * j + 2])
        )
    return w


def refl_band_moment(edges, gammas, lo, hi, zr, zi, p, n):
    """Gauss-Chebyshev sum of w(t)/|t-z|^p over one band with n nodes."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    theta = (np.arange(n) + 0.5) * (np.pi / n)
    ts = mid + half * np.cos(theta)
    vals = refl_density(edges, gammas, ts) * (half * np.sin(theta))
    if p != 0.0:
        vals = vals / np.hypot(ts - zr, zi) ** p
    return float(np.sum(vals) * (np.pi / n))


# ---------------------------------------------------------------------------
# Floquet machinery (vectorized over evaluation points)
# ---------------------------------------------------------------------------

def _monodromy(a, b, zs, with_derivative=False):
    """Transfer-matrix product over one period, vectorized over zs."""
    q = a.shape[0]
    nz = zs.shape[0]
    m00 = np.ones(nz, dtype=np.complex128)
    m01 = np.zeros(nz, dtype=np.complex128)
    m10 = np.zeros(nz, dtype=np.complex128)
    m11 = np.ones(nz, dtype=np.complex128)
    if with_derivative:
        d00 = np.zeros(nz, dtype=np.complex128)
        d01 = np.zeros(nz, dtype=np.complex128)
        d10 = np.zeros(nz, dtype=np.complex128)
        d11 = np.zeros(nz, dtype=np.complex128)
    for n in range(q):
        an = a[n]
        am = a[(n - 1) % q]
        t00 = (zs - b[n]) / an
        t01 = -am / an
        n00 = t00 * m00 + t01 * m10
        n01 = t00 * m01 + t01 * m11
        if with_derivative:
            e00 = m00 / an + t00 * d00 + t01 * d10
            e01 = m01 / an + t00 * d01 + t01 * d11
            d10, d11 = d00, d01
            d00, d01 = e00, e01
        m10, m11 = m00, m01
        m00, m01 = n00, n01
    disc = m00 + m11
    if with_derivative:
        ddisc = d00 + d11
    else:
        ddisc = None
    return m00, m01, m10, m11, disc, ddisc


def _eigvec(m00, m01, m10, m11, rho):
    """Null vector of (M - rho I): the better-conditioned of the two rows."""
    c0a, c1a = m01, rho - m00
    c0b, c1b = rho - m11, m10
    na = np.abs(c0a) ** 2 + np.abs(c1a) ** 2
    nb = np.abs(c0b) ** 2 + np.abs(c1b) ** 2
    use_a = na >= nb
    v0 = np.where(use_a, c0a, c0b)
    v1 = np.where(use_a, c1a, c1b)
    return v0, v1


def _propagate(a, b, zs, v0, v1):
    """Solution values u(0..q) from the state seed [u(0), u(-1)]."""
    q = a.shape[0]
    u = np.empty((zs.shape[0], q + 1), dtype=np.complex128)
    u_prev = v1
    u_cur = v0
    u[:, 0] = u_cur
    for n in range(q):
        u_next = ((zs - b[n]) * u_cur - a[(n - 1) % q] * u_prev) / a[n]
        u_prev = u_cur
        u_cur = u_next
        u[:, n + 1] = u_cur
    return u


def _floquet_solutions(a, b, zs):
    """Decaying/growing Floquet data at points zs off the spectrum.

    Returns (rho_small, up, um, W): up/um hold one period of the solutions
    decaying at +inf / -inf, W is the Wronskian.
    """
    m00, m01, m10, m11, disc, _ = _monodromy(a, b, zs)
    sq = np.sqrt(disc * disc - 4.0)
    flip = (np.conj(disc) * sq).real < 0
    sq = np.where(flip, -sq, sq)
    rho_big = 0.5 * (disc + sq)
    rho_small = 1.0 / rho_big
    vp0, vp1 = _eigvec(m00, m01, m10, m11, rho_small)
    vm0, vm1 = _eigvec(m00, m01, m10, m11, rho_big)
    up = _propagate(a, b, zs, vp0, vp1)
    um = _propagate(a, b, zs, vm0, vm1)
    wron = a[0] * (um[:, 0] * up[:, 1] - um[:, 1] * up[:, 0])
    return rho_small, up, um, wron


def _floquet_boundary(a, b, ts):
    """Floquet data at t + i0, t in a band interior (|disc| < 2).

    The decaying-multiplier branch continued from the upper half-plane has
    Im(rho) = -sign(disc'(t)).
    """
    zs = ts.astype(np.complex128)
    m00, m01, m10, m11, disc, ddisc = _monodromy(a, b, zs, with_derivative=True)
    dr = disc.real
    s = np.sqrt(np.maximum(4.0 - dr * dr, 0.0))
    sgn = np.where(ddisc.real >= 0.0, 1.0, -1.0)
    rho_small = 0.5 * (dr - 1j * sgn * s)
    rho_big = 0.5 * (dr + 1j * sgn * s)
    vp0, vp1 = _eigvec(m00, m01, m10, m11, rho_small)
    vm0, vm1 = _eigvec(m00, m01, m10, m11, rho_big)
    up = _propagate(a, b, zs, vp0, vp1)
    um = _propagate(a, b, zs, vm0, vm1)
    wron = a[0] * (um[:, 0] * up[:, 1] - um[:, 1] * up[:, 0])
    return rho_small, up, um, wron


def spectral_density_grid(a, b, site, ts):
    """(1/pi) Im G(site,site; t+i0) at band-interior points ts."""
    ts = np.asarray(ts, dtype=np.float64)
    q = a.shape[0]
    _, up, um, wron = _floquet_boundary(a, b, ts)
    n0 = site % q
    g = um[:, n0] * up[:, n0] / wron
    return g.imag / np.pi


def green_band_moment(a, b, site, lo, hi, zr, zi, p, n):
    """Gauss-Chebyshev sum of dens(t)/|t-z|^p over one band, n nodes."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    theta = (np.arange(n) + 0.5) * (np.pi / n)
    ts = mid + half * np.cos(theta)
    vals = spectral_density_grid(a, b, site, ts) * (half * np.sin(theta))
    if p != 0.0:
        vals = vals / np.hypot(ts - zr, zi) ** p
    return float(np.sum(vals) * (np.pi / n))


def sandwich_grid(a, b, zs, sites, dsqrt):
    """Stack of D^(1/2) G(n,m;z) D^(1/2) matrices over support sites.

    zs: complex (nz,); sites: int64 sorted (k,); dsqrt: float64 (k,).
    Returns complex (nz, k, k). Degenerate z (|disc|=2) yields non-finite
    entries which callers detect.
    """
    zs = np.asarray(zs, dtype=np.complex128)
    q = a.shape[0]
    k = sites.shape[0]
    rho_small, up, um, wron = _floquet_solutions(a, b, zs)
    out = np.empty((zs.shape[0], k, k), dtype=np.complex128)
    n0s = sites % q
    kqs = (sites - n0s) // q
    for r in range(k):
        for c in range(k):
            if sites[r] <= sites[c]:
                i0, ki = n0s[r], kqs[r]
                j0, kj = n0s[c], kqs[c]
            else:
                i0, ki = n0s[c], kqs[c]
                j0, kj = n0s[r], kqs[r]
            g = rho_small ** (kj - ki) * um[:, i0] * up[:, j0] / wron
            out[:, r, c] = dsqrt[r] * dsqrt[c] * g
    return out


# ---------------------------------------------------------------------------
# dense complex Hessenberg QR (Wilkinson-style shifts)
# ---------------------------------------------------------------------------

def _rotg(x, y):
    """Complex Givens (c real, s) with -conj(s) x + c y = 0."""
    if y == 0:
        return 1.0, 0.0 + 0.0j
    if x == 0:
        return 0.0, 1.0 + 0.0j
    ax = abs(x)
    r = np.hypot(ax, abs(y))
    c = ax / r
    s = (x / ax) * np.conj(y) / r
    return c, s


def _two_by_two(a00, a01, a10, a11):
    tr = a00 + a11
    det = a00 * a11 - a01 * a10
    sq = np.sqrt(0.25 * tr * tr - det)
    if (np.conj(tr) * sq).real < 0:
        sq = -sq
    lam1 = 0.5 * tr + sq
    lam2 = det / lam1 if lam1 != 0 else 0.5 * tr - sq
    return lam1, lam2


def hessenberg_eigvals(H, max_total):
    """Eigenvalues of a complex upper-Hessenberg matrix, in place.

    Returns (w, ok); ok False means the iteration count hit max_total.
    """
    n = H.shape[0]
    w = np.zeros(n, dtype=np.complex128)
    if n == 0:
        return w, True
    u = n - 1
    total = 0
    stagnant = 0
    while u >= 0:
        if u == 0:
            w[0] = H[0, 0]
            break
        # deflation scan: find the top of the active window
        l = u
        while l > 0:
            s = abs(H[l - 1, l - 1]) + abs(H[l, l])
            if s == 0.0:
                s = abs(H[l, l - 1])
            if abs(H[l, l - 1]) <= _ULP * s:
                H[l, l - 1] = 0.0
                break
            l -= 1
        if l == u:
            w[u] = H[u, u]
            u -= 1
            stagnant = 0
            continue
        if l == u - 1:
            w[u], w[u - 1] = _two_by_two(
                H[l, l], H[l, l + 1], H[l + 1, l], H[l + 1, l + 1]
            )
            u -= 2
            stagnant = 0
            continue
        total += 1
        stagnant += 1
        if total > max_total:
            return w, False
        if stagnant % 16 == 0:
            mu = H[u, u] + 0.75 * abs(H[u, u - 1])
        else:
            lam1, lam2 = _two_by_two(
                H[u - 1, u - 1], H[u - 1, u], H[u, u - 1], H[u, u]
            )
            mu = lam1 if abs(lam1 - H[u, u]) <= abs(lam2 - H[u, u]) else lam2
        # implicit single-shift sweep on the window [l, u]
        x = H[l, l] - mu
        y = H[l + 1, l]
        for k in range(l, u):
            c, s = _rotg(x, y)
            j0 = k - 1 if k > l else l
            t1 = H[k, j0:u + 1].copy()
            t2 = H[k + 1, j0:u + 1]
            H[k, j0:u + 1] = c * t1 + s * t2
            H[k + 1, j0:u + 1] = -np.conj(s) * t1 + c * t2
            i1 = min(k + 2, u)
            t1 = H[l:i1 + 1, k].copy()
            t2 = H[l:i1 + 1, k + 1]
            H[l:i1 + 1, k] = c * t1 + np.conj(s) * t2
            H[l:i1 + 1, k + 1] = -s * t1 + c * t2
            if k < u - 1:
                x = H[k + 1, k]
                y = H[k + 2, k]
    return w, True


# ---------------------------------------------------------------------------
# one-sided Jacobi singular values
# ---------------------------------------------------------------------------

def jacobi_singular_values(A, tol, max_sweeps):
    """Singular values via one-sided Jacobi column orthogonalization.

    A is overwritten. Returns (sv, ok); sv unsorted.
    """
    m, n = A.shape
    if n == 0:
        return np.zeros(0, dtype=np.float64), True
    ok = False
    for _ in range(max_sweeps):
        rotated = False
        for p_ in range(n - 1):
            for q_ in range(p_ + 1, n):
                cp = A[:, p_]
                cq = A[:, q_]
                app = float(np.vdot(cp, cp).real)
                aqq = float(np.vdot(cq, cq).real)
                g = complex(np.vdot(cp, cq))
                ag = abs(g)
                if ag <= tol * np.sqrt(app * aqq) or ag == 0.0:
                    continue
                rotated = True
                tau = (aqq - app) / (2.0 * ag)
                if tau >= 0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                om = g / ag
                new_p = c * cp - s * np.conj(om) * cq
                new_q = s * om * cp + c * cq
                A[:, p_] = new_p
                A[:, q_] = new_q
        if not rotated:
            ok = True
            break
    sv = np.sqrt(np.sum(np.abs(A) ** 2, axis=0))
    return sv, ok
