"""Unnormalized forward DFT kernels: ``X[k] = sum_j x[j] exp(-2 pi i j k / n)``.

Composite lengths split off their smallest prime factor (decimation in time);
primes up to ``DIRECT_PRIME_MAX`` are evaluated as a dense matrix product and
larger primes go through Bluestein's chirp reduction to a power-of-two cyclic
convolution.  Every table comes from :mod:`abharm._roots`.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._roots import conj_roots

DIRECT_PRIME_MAX = 61


@lru_cache(maxsize=1024)
def smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


@lru_cache(maxsize=256)
def _dft_matrix(p: int) -> np.ndarray:
    k = np.arange(p)
    m = conj_roots(p)[np.outer(k, k) % p]
    m.setflags(write=False)
    return m


@lru_cache(maxsize=256)
def _twiddles(p: int, m: int) -> np.ndarray:
    n = p * m
    w = conj_roots(n)[np.outer(np.arange(p), np.arange(m)) % n]
    w.setflags(write=False)
    return w


def _prime_dft(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    if n <= DIRECT_PRIME_MAX:
        return a @ _dft_matrix(n).T
    return _bluestein(a)


def dft_last_axis(a: np.ndarray) -> np.ndarray:
    """DFT along the last axis of a 2-D ``(batch, n)`` array."""
    batch, n = a.shape
    if n == 1:
        return a.copy()
    p = smallest_prime_factor(n)
    if p == n:
        return _prime_dft(a)
    m = n // p
    # x[p*x1 + x2] -> rows indexed by x2, each a length-m subsequence
    y = a.reshape(batch, m, p).transpose(0, 2, 1).reshape(batch * p, m)
    y = dft_last_axis(y).reshape(batch, p, m)
    y = y * _twiddles(p, m)
    # length-p DFT across x2; output index k1 + m*k2 sits at [k2, k1]
    if p <= DIRECT_PRIME_MAX:
        z = np.matmul(_dft_matrix(p), y)
    else:
        z = _prime_dft(y.transpose(0, 2, 1).reshape(batch * m, p))
        z = z.reshape(batch, m, p).transpose(0, 2, 1)
    return z.reshape(batch, n)


@lru_cache(maxsize=64)
def _bluestein_plan(n: int) -> tuple[np.ndarray, np.ndarray, int]:
    size = 1
    while size < 2 * n - 1:
        size *= 2
    j = np.arange(n, dtype=np.int64)
    chirp = conj_roots(2 * n)[(j * j) % (2 * n)]  # exp(-pi i j^2 / n)
    kernel = np.zeros(size, dtype=complex)
    kernel[:n] = np.conj(chirp)
    kernel[size - n + 1:] = np.conj(chirp[1:])[::-1]
    kernel_hat = dft_last_axis(kernel[None, :])[0]
    chirp.setflags(write=False)
    kernel_hat.setflags(write=False)
    return chirp, kernel_hat, size


def _bluestein(a: np.ndarray) -> np.ndarray:
    batch, n = a.shape
    chirp, kernel_hat, size = _bluestein_plan(n)
    u = np.zeros((batch, size), dtype=complex)
    u[:, :n] = a * chirp
    spec = dft_last_axis(u) * kernel_hat
    conv = np.conj(dft_last_axis(np.conj(spec))) / size
    return conv[:, :n] * chirp


def dft_nd(values: np.ndarray, orders: tuple[int, ...], inverse: bool = False) -> np.ndarray:
    """Row-column DFT of a rank-ordered vector over ``prod Z/n_j``.

    ``inverse`` flips the sign of the exponent (no ``1/N`` factor).
    """
    if inverse:
        return np.conj(dft_nd(np.conj(values), orders))
    grid = np.asarray(values, dtype=complex).reshape(orders, order="F")
    for axis, n in enumerate(orders):
        if n == 1:
            continue
        moved = np.moveaxis(grid, axis, -1)
        shape = moved.shape
        out = dft_last_axis(moved.reshape(-1, n)).reshape(shape)
        grid = np.moveaxis(out, -1, axis)
    return grid.reshape(-1, order="F")
