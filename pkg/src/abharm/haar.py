"""The translation-invariant integral on a finite group.

On a finite group the invariant integral is ``h * sum_x f(x)`` for a point
mass ``h > 0``; :func:`uniqueness_oracle` checks numerically that no other
invariant linear functional exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidWeight, ShapeMismatch, SizeCapExceeded
from .functions import GroupFunction
from .group import GroupSpec

PAIRWISE_THRESHOLD = 2**12
UNIQUENESS_MAX_ORDER = 512
RANK_RTOL = 1e-10


@dataclass(frozen=True)
class HaarWeight:
    spec: GroupSpec
    point_mass: float | None = None

    def __post_init__(self) -> None:
        h = 1.0 / self.spec.order if self.point_mass is None else float(self.point_mass)
        if not (math.isfinite(h) and h > 0):
            raise InvalidWeight(f"point mass must be a positive real, got {h!r}")
        object.__setattr__(self, "point_mass", h)

    @classmethod
    def normalized(cls, spec: GroupSpec) -> HaarWeight:
        """Total mass one."""
        return cls(spec, 1.0 / spec.order)

    @classmethod
    def counting(cls, spec: GroupSpec) -> HaarWeight:
        return cls(spec, 1.0)

    @property
    def total_mass(self) -> float:
        return self.point_mass * self.spec.order

    def scaled(self, factor: float) -> HaarWeight:
        return HaarWeight(self.spec, self.point_mass * factor)


def _check_same_group(w: HaarWeight, f: GroupFunction) -> None:
    if f.spec != w.spec:
        raise ShapeMismatch(
            f"function lives on {f.spec.cyclic_orders}, weight on {w.spec.cyclic_orders}")


def total(values: np.ndarray) -> complex:
    """Sum in rank order; pairwise (numpy's tree) above 2**12 terms."""
    if values.shape[0] <= PAIRWISE_THRESHOLD:
        if values.shape[0] == 0:
            return 0j
        return complex(np.cumsum(values)[-1])
    return complex(np.sum(values))


def integrate(w: HaarWeight, f: GroupFunction) -> complex:
    _check_same_group(w, f)
    return w.point_mass * total(f.values)


def check_invariance(w: HaarWeight, f: GroupFunction, a) -> float:
    """``|integral of f(. + a) - integral of f|``."""
    from .transform import translate

    _check_same_group(w, f)
    # f(x + a) is f translated by -a
    shifted = translate(f, tuple((-x) % n for x, n in zip(a, w.spec.cyclic_orders)))
    return abs(integrate(w, shifted) - integrate(w, f))


def invariance_bound(w: HaarWeight, f: GroupFunction) -> float:
    return 1e-12 * (1.0 + abs(integrate(w, GroupFunction(f.spec, np.abs(f.values)))))


def _generator_shift(spec: GroupSpec, j: int) -> np.ndarray:
    """Permutation ``p`` with ``p[rank(x)] = rank(x - e_j)``."""
    coords = spec.coordinates()
    coords[:, j] = (coords[:, j] - 1) % spec.cyclic_orders[j]
    return coords @ np.array(spec.strides, dtype=np.int64)


def invariance_system(spec: GroupSpec, full: bool = False) -> np.ndarray:
    """Rows ``c[x - g] - c[x] = 0`` over generators ``g``, or every ``g`` if ``full``.

    A functional ``L(f) = sum_x c_x f(x)`` is invariant under translation by
    ``g`` exactly when ``c`` solves the rows for ``g``.
    """
    n = spec.order
    eye = np.eye(n)
    blocks = []
    if full:
        coords = spec.coordinates()
        strides = np.array(spec.strides, dtype=np.int64)
        orders = np.array(spec.cyclic_orders, dtype=np.int64)
        for g in coords[1:]:
            perm = ((coords - g) % orders) @ strides
            blocks.append(eye[perm] - eye)
    else:
        for j, m in enumerate(spec.cyclic_orders):
            if m > 1:
                blocks.append(eye[_generator_shift(spec, j)] - eye)
    if not blocks:
        return np.zeros((0, n))
    return np.vstack(blocks)


def invariant_functionals(spec: GroupSpec, full: bool = False) -> np.ndarray:
    """Orthonormal basis (columns) of the invariant functionals' coefficient space."""
    if spec.order > UNIQUENESS_MAX_ORDER:
        raise SizeCapExceeded(
            f"uniqueness oracle limited to order {UNIQUENESS_MAX_ORDER}, got {spec.order}")
    m = invariance_system(spec, full)
    if m.shape[0] == 0:
        return np.eye(spec.order)
    _, s, vt = np.linalg.svd(m, full_matrices=False)
    tol = RANK_RTOL * s[0] if s.size else 0.0
    numerical_rank = int(np.sum(s > tol)) if s[0] > 0 else 0
    return vt[numerical_rank:].T


def uniqueness_oracle(spec: GroupSpec, full: bool = False) -> int:
    """Dimension of the space of translation-invariant linear functionals."""
    return invariant_functionals(spec, full).shape[1]

