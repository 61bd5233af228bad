"""Dense complex-valued functions on a finite group and on its dual."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import NonFiniteValue, ShapeMismatch
from .group import GroupSpec, rank


def _as_values(spec: GroupSpec, values) -> np.ndarray:
    arr = np.array(values, dtype=complex).reshape(-1)
    if arr.shape[0] != spec.order:
        raise ShapeMismatch(
            f"got {arr.shape[0]} values for a group of order {spec.order}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValue("function values must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class _Dense:
    spec: GroupSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_values(self.spec, self.values))

    def __len__(self) -> int:
        return self.spec.order

    def __getitem__(self, a: Sequence[int]) -> complex:
        return complex(self.values[rank(self.spec, a)])

    def grid(self) -> np.ndarray:
        """View with axis j indexing coordinate j (first factor fastest)."""
        return self.values.reshape(self.spec.cyclic_orders, order="F")

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values))) if self.spec.order else 0.0

    def l1(self) -> float:
        return float(np.sum(np.abs(self.values)))


class GroupFunction(_Dense):
    """``values[rank(x)] = f(x)``."""

    @classmethod
    def zeros(cls, spec: GroupSpec) -> GroupFunction:
        return cls(spec, np.zeros(spec.order, dtype=complex))

    @classmethod
    def constant(cls, spec: GroupSpec, c: complex = 1.0) -> GroupFunction:
        return cls(spec, np.full(spec.order, c, dtype=complex))

    @classmethod
    def delta(cls, spec: GroupSpec, a: Sequence[int] | None = None) -> GroupFunction:
        v = np.zeros(spec.order, dtype=complex)
        v[0 if a is None else rank(spec, a)] = 1.0
        return cls(spec, v)

    @classmethod
    def from_callable(cls, spec: GroupSpec, fn: Callable) -> GroupFunction:
        return cls(spec, [fn(x) for x in spec.elements()])


class SpectrumFunction(_Dense):
    """Values indexed by the rank of a character's frequency tuple."""
