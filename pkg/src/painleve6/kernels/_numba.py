"""Modular kernels compiled with numba.

All residues live in int64 and the moduli are below 2**31, so a product of two
residues never overflows before reduction.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def powmod(a, e, p):
    r = 1
    a %= p
    while e > 0:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


@njit(cache=True)
def _deg(a, n):
    while n >= 0 and a[n] == 0:
        n -= 1
    return n


@njit(cache=True)
def poly_eval(c, x, p):
    acc = 0
    for k in range(c.shape[0] - 1, -1, -1):
        acc = (acc * x + c[k]) % p
    return acc


@njit(cache=True)
def resultant(a, b, p):
    """Res(a, b) mod p for coefficient vectors (low degree first)."""
    A = a.copy()
    B = b.copy()
    m = _deg(A, A.shape[0] - 1)
    n = _deg(B, B.shape[0] - 1)
    if m < 0 or n < 0:
        return 0
    res = 1
    while True:
        if n == 0:
            return res * powmod(B[0], m, p) % p
        # A <- A mod B
        inv = powmod(B[n], p - 2, p)
        k = m
        while k >= n:
            q = A[k] * inv % p
            if q != 0:
                off = k - n
                for j in range(n + 1):
                    A[off + j] = (A[off + j] - q * B[j]) % p
            k -= 1
            while k >= 0 and A[k] == 0 and k >= n:
                k -= 1
        k = _deg(A, min(m, n - 1))
        if k < 0:
            return 0
        if (m & 1) and (n & 1):
            res = (p - res) % p
        res = res * powmod(B[n], m - k, p) % p
        A, B = B, A
        m, n = n, k


@njit(cache=True)
def _eval_last(D, x, p):
    """Evaluate a (ns, nu, nx) array at X = x, giving (ns, nu)."""
    ns, nu, nx = D.shape
    out = np.zeros((ns, nu), dtype=np.int64)
    for i in range(ns):
        for j in range(nu):
            acc = 0
            for k in range(nx - 1, -1, -1):
                acc = (acc * x + D[i, j, k]) % p
            out[i, j] = acc
    return out


@njit(cache=True)
def resultant_grid(D1, D2, us, xs, p):
    """Res_s(D1, D2) at every (u, x) of the grid us x xs.

    D1, D2 are (ns, nu, nx) residue arrays.  ``ok[j, i]`` is False where a
    leading s-coefficient vanishes, i.e. the specialization is not faithful.
    """
    n1 = D1.shape[0]
    n2 = D2.shape[0]
    out = np.zeros((xs.shape[0], us.shape[0]), dtype=np.int64)
    ok = np.ones((xs.shape[0], us.shape[0]), dtype=np.bool_)
    a = np.zeros(n1, dtype=np.int64)
    b = np.zeros(n2, dtype=np.int64)
    for jx in range(xs.shape[0]):
        E1 = _eval_last(D1, xs[jx], p)
        E2 = _eval_last(D2, xs[jx], p)
        for iu in range(us.shape[0]):
            u = us[iu]
            for k in range(n1):
                a[k] = poly_eval(E1[k], u, p)
            for k in range(n2):
                b[k] = poly_eval(E2[k], u, p)
            if a[n1 - 1] == 0 or b[n2 - 1] == 0:
                ok[jx, iu] = False
                continue
            out[jx, iu] = resultant(a, b, p)
    return out, ok


@njit(cache=True)
def interpolate(xs, ys, p):
    """Newton interpolation mod p; returns monomial coefficients."""
    n = xs.shape[0]
    c = ys.copy() % p
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = (c[i] - c[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            c[i] = num * powmod(den, p - 2, p) % p
    out = np.zeros(n, dtype=np.int64)
    for i in range(n - 1, -1, -1):
        # out <- out * (X - xs[i]) + c[i]
        for k in range(n - 1, 0, -1):
            out[k] = (out[k - 1] - xs[i] * out[k]) % p
        out[0] = (c[i] - xs[i] * out[0]) % p
    return out


@njit(cache=True)
def interpolate_rows(xs, Y, p):
    """Interpolate each row of Y (values at xs) independently."""
    out = np.zeros(Y.shape, dtype=np.int64)
    for r in range(Y.shape[0]):
        out[r] = interpolate(xs, Y[r], p)
    return out
