"""Cached root-of-unity tables.

``roots(n)[k] == exp(2*pi*i*k/n)``.  Angles are reduced to the first octant
before calling sin/cos, and the points at multiples of a quarter turn are
exact, so each table is symmetric under conjugation and rotation to the last
bit.  Tables are read-only and shared.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _octant_cos_sin(k: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # Work with 8k in units of n so the octant tests are exact integer ones.
    k = np.asarray(k, dtype=np.int64) % n
    e = 8 * k  # angle = (pi/4) * e / n
    octant = e // n
    rem = e - octant * n  # in [0, n)
    # reflect odd octants so the reduced angle is always in [0, pi/4]
    odd = (octant % 2) == 1
    red = np.where(odd, n - rem, rem)
    theta = (np.pi / 4) * (red / n)
    c, s = np.cos(theta), np.sin(theta)
    # odd multiples of pi/4: cos and sin of pi/4 differ in the last bit
    diagonal = red == n
    c = np.where(diagonal, np.sqrt(0.5), c)
    s = np.where(diagonal, np.sqrt(0.5), s)
    # swap inside octants 1, 2, 5, 6
    swap = np.isin(octant, (1, 2, 5, 6))
    c, s = np.where(swap, s, c), np.where(swap, c, s)
    cos_sign = np.where(np.isin(octant, (2, 3, 4, 5)), -1.0, 1.0)
    sin_sign = np.where(octant >= 4, -1.0, 1.0)
    c = cos_sign * c
    s = sin_sign * s
    # exact quarter points
    quarter = (4 * k) % n == 0
    q = (4 * k) // n
    c = np.where(quarter, np.choose(q % 4, [1.0, 0.0, -1.0, 0.0]), c)
    s = np.where(quarter, np.choose(q % 4, [0.0, 1.0, 0.0, -1.0]), s)
    return c, s


@lru_cache(maxsize=256)
def roots(n: int) -> np.ndarray:
    c, s = _octant_cos_sin(np.arange(n), n)
    table = c + 1j * s
    table.setflags(write=False)
    return table


@lru_cache(maxsize=256)
def conj_roots(n: int) -> np.ndarray:
    table = np.conj(roots(n))
    table.setflags(write=False)
    return table
