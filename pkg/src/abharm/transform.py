"""Fourier analysis on finite abelian groups.

Conventions, for a Haar weight with point mass ``h`` on a group of order N::

    fourier(f)(t)     = h * sum_x f(x) * conj(chi_t(x))
    inverse(F)(x)     = 1/(h*N) * sum_t F(t) * chi_t(x)
    convolve(f, g)(x) = h * sum_y f(y) * g(x - y)

so ``fourier(convolve(f, g)) == fourier(f) * fourier(g)`` for every ``h``.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _fft, _roots
from .dual import DEFAULT_EXPONENT_CAP, LaurentCharacter, _power
from .errors import ExponentCapExceeded, OverflowToInfinity, ShapeMismatch
from .functions import GroupFunction, SpectrumFunction
from .group import GroupSpec, check_element
from .haar import HaarWeight

SPECTRAL_CONVOLUTION_MIN = 256

__all__ = [
    "GroupFunction", "SpectrumFunction",
    "fourier_naive", "fourier_fast", "fourier", "fourier_coefficient",
    "inverse_fourier", "convolve", "translate", "fourier_laplace_integers",
]


def _check(w: HaarWeight, f) -> None:
    if f.spec != w.spec:
        raise ShapeMismatch(
            f"values live on {f.spec.cyclic_orders}, weight on {w.spec.cyclic_orders}")


def _phase_setup(spec: GroupSpec) -> tuple[np.ndarray, np.ndarray, int]:
    # chi_t(x) = exp(2 pi i * (sum_j t_j x_j L/n_j) / L) with L = lcm(n_j): one
    # exact integer phase per (t, x) and a single table lookup.
    lcm = math.lcm(*spec.cyclic_orders) if spec.cyclic_orders else 1
    coords = spec.coordinates()
    weighted = coords * np.array([lcm // n for n in spec.cyclic_orders], dtype=np.int64)
    return coords, weighted, lcm


def _naive(spec: GroupSpec, values: np.ndarray, sign: int) -> np.ndarray:
    coords, weighted, lcm = _phase_setup(spec)
    table = _roots.conj_roots(lcm) if sign < 0 else _roots.roots(lcm)
    out = np.empty(spec.order, dtype=complex)
    for r in range(spec.order):
        phase = (weighted @ coords[r]) % lcm
        out[r] = np.sum(values * table[phase])
    return out


def fourier_naive(w: HaarWeight, f: GroupFunction) -> SpectrumFunction:
    """O(N^2) reference transform, one character at a time."""
    _check(w, f)
    return SpectrumFunction(w.spec, w.point_mass * _naive(w.spec, f.values, -1))


def fourier_coefficient(w: HaarWeight, f: GroupFunction, t: Sequence[int]) -> complex:
    """Single coefficient ``fourier(f)(t)`` by direct summation."""
    _check(w, f)
    t = check_element(w.spec, t)
    _, weighted, lcm = _phase_setup(w.spec)
    phase = (weighted @ np.array(t, dtype=np.int64)) % lcm
    return w.point_mass * complex(np.sum(f.values * _roots.conj_roots(lcm)[phase]))


def fourier_fast(w: HaarWeight, f: GroupFunction) -> SpectrumFunction:
    _check(w, f)
    return SpectrumFunction(
        w.spec, w.point_mass * _fft.dft_nd(f.values, w.spec.cyclic_orders))


def fourier(w: HaarWeight, f: GroupFunction, naive: bool = False) -> SpectrumFunction:
    return fourier_naive(w, f) if naive else fourier_fast(w, f)


def inverse_fourier(w: HaarWeight, F: SpectrumFunction, naive: bool = False) -> GroupFunction:
    _check(w, F)
    scale = 1.0 / (w.point_mass * w.spec.order)
    if naive:
        raw = _naive(w.spec, F.values, +1)
    else:
        raw = _fft.dft_nd(F.values, w.spec.cyclic_orders, inverse=True)
    return GroupFunction(w.spec, scale * raw)


def translate(f: GroupFunction, a: Sequence[int]) -> GroupFunction:
    """``x -> f(x - a)``; a pure re-indexing."""
    a = check_element(f.spec, a)
    grid = f.grid()
    for axis, shift in enumerate(a):
        if shift:
            grid = np.roll(grid, shift, axis=axis)
    return GroupFunction(f.spec, grid.reshape(-1, order="F"))


def _convolve_direct(spec: GroupSpec, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    coords = spec.coordinates()
    strides = np.array(spec.strides, dtype=np.int64)
    orders = np.array(spec.cyclic_orders, dtype=np.int64)
    out = np.zeros(spec.order, dtype=complex)
    for y in range(spec.order):
        if f[y] == 0:
            continue
        idx = ((coords - coords[y]) % orders) @ strides
        out += f[y] * g[idx]
    return out


def convolve(w: HaarWeight, f: GroupFunction, g: GroupFunction,
             method: str | None = None) -> GroupFunction:
    """``(f * g)(x) = h * sum_y f(y) g(x - y)``.

    ``method`` is ``"direct"`` (O(N^2)) or ``"spectral"``; by default the
    spectral path is used above 256 points.
    """
    _check(w, f)
    _check(w, g)
    if method is None:
        method = "spectral" if w.spec.order > SPECTRAL_CONVOLUTION_MIN else "direct"
    if method == "direct":
        return GroupFunction(w.spec, w.point_mass * _convolve_direct(w.spec, f.values, g.values))
    if method == "spectral":
        product = SpectrumFunction(w.spec, fourier_fast(w, f).values * fourier_fast(w, g).values)
        return inverse_fourier(w, product)
    raise ValueError(f"unknown convolution method {method!r}")


def _support_items(f) -> Iterable[tuple[int, complex]]:
    if isinstance(f, Mapping):
        return f.items()
    return f


def fourier_laplace_integers(f, phi: LaurentCharacter,
                             exponent_cap: int = DEFAULT_EXPONENT_CAP) -> complex:
    """``sum_k f(k) * conj(z)**k`` for finitely supported ``f`` on the integers.

    ``f`` is a mapping ``k -> value`` or an iterable of ``(k, value)`` pairs;
    repeated indices add.  The sum is accumulated by Horner's rule over the
    support range and then shifted by ``conj(z)**min(k)``.
    """
    coeffs: dict[int, complex] = {}
    for k, v in _support_items(f):
        k = int(k)
        if abs(k) > exponent_cap:
            raise ExponentCapExceeded(f"index {k} exceeds exponent cap {exponent_cap}")
        coeffs[k] = coeffs.get(k, 0j) + complex(v)
    if not coeffs:
        return 0j
    lo, hi = min(coeffs), max(coeffs)
    w = phi.base.conjugate()
    acc = 0j
    for k in range(hi, lo - 1, -1):
        acc = acc * w + coeffs.get(k, 0j)
    result = acc * _power(w, lo, exponent_cap)
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise OverflowToInfinity("Fourier-Laplace sum is not representable")
    return result
