"""Pure-numpy reference implementations of the hot kernels.

All arrays are ``int64`` holding residues in ``[0, p)``.  Callers keep
operand sizes small enough that intermediate sums stay below 2**63.
"""
import numpy as np


def poly_mul(a, b, p):
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    return np.convolve(a, b) % p


def series_inv(a, n, p):
    out = np.zeros(n, dtype=np.int64)
    inv0 = pow(int(a[0]), p - 2, p)
    out[0] = inv0
    for k in range(1, n):
        j = min(k, a.size - 1)
        if j == 0:
            continue
        s = int(np.dot(a[1:j + 1], out[k - j:k][::-1]) % p)
        out[k] = (-s * inv0) % p
    return out


def rank_mod_p(m, p):
    a = np.array(m, dtype=np.int64, copy=True) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, c].copy()
        a[rank + 1:] = (a[rank + 1:] - np.outer(below, a[rank])) % p
        rank += 1
    return rank


def _powmod(base, e, p):
    result = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            result = (result * b) % p
        b = (b * b) % p
        e >>= 1
    return result


def eval_polys(exps, coeffs, owner, npolys, x, p):
    batch = x.shape[0]
    out = np.zeros((batch, npolys), dtype=np.int64)
    for t in range(exps.shape[0]):
        term = np.full(batch, coeffs[t] % p, dtype=np.int64)
        for v in range(exps.shape[1]):
            e = int(exps[t, v])
            if e:
                term = (term * _powmod(x[:, v], e, p)) % p
        out[:, owner[t]] = (out[:, owner[t]] + term) % p
    return out
