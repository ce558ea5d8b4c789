"""numba-compiled kernels; same contracts as :mod:`._numpy`."""
import numpy as np
from numba import njit


@njit(cache=True)
def _powmod(b, e, p):
    r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


@njit(cache=True)
def _safe_terms(p):
    # how many products < p^2 can be summed before int64 overflows
    sq = (p - 1) * (p - 1)
    return max(1, (2 ** 62) // max(sq, 1))


@njit(cache=True)
def poly_mul(a, b, p):
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(a.size + b.size - 1, dtype=np.int64)
    chunk = _safe_terms(p)
    pending = 0
    for i in range(a.size):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(b.size):
            out[i + j] += ai * b[j]
        pending += 1
        if pending == chunk:
            for k in range(out.size):
                out[k] %= p
            pending = 0
    for k in range(out.size):
        out[k] %= p
    return out


@njit(cache=True)
def series_inv(a, n, p):
    out = np.zeros(n, dtype=np.int64)
    inv0 = _powmod(a[0], p - 2, p)
    out[0] = inv0
    chunk = _safe_terms(p)
    for k in range(1, n):
        s = 0
        top = min(k, a.size - 1)
        for j in range(1, top + 1):
            s += a[j] * out[k - j]
            if j % chunk == 0:
                s %= p
        out[k] = (-(s % p) * inv0) % p
    return out


@njit(cache=True)
def _rank(a, p):
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if a[r, c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(cols):
                tmp = a[rank, k]
                a[rank, k] = a[piv, k]
                a[piv, k] = tmp
        inv = _powmod(a[rank, c], p - 2, p)
        for k in range(cols):
            a[rank, k] = (a[rank, k] * inv) % p
        for r in range(rank + 1, rows):
            f = a[r, c]
            if f != 0:
                for k in range(c, cols):
                    a[r, k] = (a[r, k] - f * a[rank, k]) % p
        rank += 1
    return rank


def rank_mod_p(m, p):
    a = np.array(m, dtype=np.int64, copy=True) % p
    if a.ndim != 2 or a.size == 0:
        return 0
    return int(_rank(a, p))


@njit(cache=True)
def eval_polys(exps, coeffs, owner, npolys, x, p):
    batch = x.shape[0]
    out = np.zeros((batch, npolys), dtype=np.int64)
    for s in range(batch):
        for t in range(exps.shape[0]):
            term = coeffs[t] % p
            for v in range(exps.shape[1]):
                e = exps[t, v]
                if e != 0 and term != 0:
                    term = (term * _powmod(x[s, v], e, p)) % p
            out[s, owner[t]] = (out[s, owner[t]] + term) % p
    return out
