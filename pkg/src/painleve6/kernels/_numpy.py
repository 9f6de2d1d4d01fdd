"""Pure numpy versions of the modular kernels (no compilation step).

Vectorised along polynomial coefficients; the outer loops stay in Python, so
this backend is markedly slower but has no numba dependency at import time.
"""

import numpy as np


def powmod(a, e, p):
    return pow(int(a) % p, int(e), p)


def poly_eval(c, x, p):
    acc = 0
    for v in c[::-1]:
        acc = (acc * int(x) + int(v)) % p
    return acc


def _trim(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def resultant(a, b, p):
    A = _trim(np.asarray(a, dtype=np.int64) % p)
    B = _trim(np.asarray(b, dtype=np.int64) % p)
    if A.size == 0 or B.size == 0:
        return 0
    res = 1
    while True:
        m, n = A.size - 1, B.size - 1
        if n == 0:
            return res * pow(int(B[0]), m, p) % p
        inv = pow(int(B[-1]), p - 2, p)
        A = A.copy()
        for k in range(m, n - 1, -1):
            q = int(A[k]) * inv % p
            if q:
                A[k - n: k + 1] = (A[k - n: k + 1] - q * B) % p
        R = _trim(A[:n])
        if R.size == 0:
            return 0
        k = R.size - 1
        if m & 1 and n & 1:
            res = (p - res) % p
        res = res * pow(int(B[-1]), m - k, p) % p
        A, B = B, R


def _powers(v, n, p):
    out = np.ones((v.size, n), dtype=np.int64)
    for k in range(1, n):
        out[:, k] = out[:, k - 1] * v % p
    return out


def _contract(D, pw, p):
    # sum_k D[..., k] * pw[k] mod p without overflow: reduce term by term
    acc = np.zeros(D.shape[:-1], dtype=np.int64)
    for k in range(D.shape[-1]):
        acc = (acc + D[..., k] * pw[k]) % p
    return acc


def resultant_grid(D1, D2, us, xs, p):
    us = np.asarray(us, dtype=np.int64)
    xs = np.asarray(xs, dtype=np.int64)
    out = np.zeros((xs.size, us.size), dtype=np.int64)
    ok = np.ones((xs.size, us.size), dtype=bool)
    px1 = _powers(xs, D1.shape[2], p)
    px2 = _powers(xs, D2.shape[2], p)
    pu1 = _powers(us, D1.shape[1], p)
    pu2 = _powers(us, D2.shape[1], p)
    for jx in range(xs.size):
        E1 = _contract(D1, px1[jx], p)  # (ns, nu)
        E2 = _contract(D2, px2[jx], p)
        A = np.stack([_contract(E1, pu1[i], p) for i in range(us.size)])
        B = np.stack([_contract(E2, pu2[i], p) for i in range(us.size)])
        for iu in range(us.size):
            if A[iu, -1] == 0 or B[iu, -1] == 0:
                ok[jx, iu] = False
                continue
            out[jx, iu] = resultant(A[iu], B[iu], p)
    return out, ok


def interpolate(xs, ys, p):
    xs = [int(v) for v in xs]
    c = [int(v) % p for v in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            c[i] = (c[i] - c[i - 1]) * pow(xs[i] - xs[i - j], p - 2, p) % p
    out = np.zeros(n, dtype=np.int64)
    for i in range(n - 1, -1, -1):
        shifted = np.concatenate(([0], out[:-1]))
        out = (shifted - xs[i] * out) % p
        out[0] = (out[0] + c[i]) % p
    return out


def interpolate_rows(xs, Y, p):
    return np.stack([interpolate(xs, row, p) for row in Y]) if len(Y) else np.zeros((0, len(xs)), np.int64)
