"""Finite abelian groups presented as products of cyclic groups.

Elements are plain tuples of ints, one residue per cyclic factor.  Dense
storage uses the little-endian mixed-radix rank: the first listed factor
varies fastest, so ``rank(a) = a[0] + n[0]*a[1] + n[0]*n[1]*a[2] + ...``.
All arithmetic here is exact integer arithmetic.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import IndexOutOfRange, NonPositiveOrder, ShapeMismatch, SizeCapExceeded

DEFAULT_SIZE_CAP = 2**24
SIZE_CAP_ENV = "ABHARM_SIZE_CAP"

GroupElement = tuple  # tuple[int, ...]


def size_cap() -> int:
    """Current point cap: ``$ABHARM_SIZE_CAP`` if set, else 2**24."""
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SizeCapExceeded(f"{SIZE_CAP_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise SizeCapExceeded(f"{SIZE_CAP_ENV} must be positive, got {cap}")
    return cap


def check_cap(order: int, cap: int | None = None) -> None:
    cap = size_cap() if cap is None else cap
    if order > cap:
        raise SizeCapExceeded(f"group order {order} exceeds size cap {cap}")


@dataclass(frozen=True)
class GroupSpec:
    """Z/n_0 x Z/n_1 x ... with ``cyclic_orders = (n_0, n_1, ...)``."""

    cyclic_orders: tuple[int, ...]
    order: int = field(init=False)

    def __post_init__(self) -> None:
        orders = tuple(int(n) for n in self.cyclic_orders)
        for n in orders:
            if n < 1:
                raise NonPositiveOrder(f"cyclic order {n} is not positive")
        object.__setattr__(self, "cyclic_orders", orders)
        object.__setattr__(self, "order", math.prod(orders))

    @property
    def ndim(self) -> int:
        return len(self.cyclic_orders)

    @property
    def strides(self) -> tuple[int, ...]:
        out, s = [], 1
        for n in self.cyclic_orders:
            out.append(s)
            s *= n
        return tuple(out)

    def elements(self) -> Iterator[GroupElement]:
        """All elements in rank order."""
        for k in range(self.order):
            yield unrank(self, k)

    def coordinates(self) -> np.ndarray:
        """``(order, ndim)`` int64 array whose row k is ``unrank(self, k)``."""
        k = np.arange(self.order, dtype=np.int64)
        cols = []
        for n in self.cyclic_orders:
            cols.append(k % n)
            k = k // n
        if not cols:
            return np.zeros((self.order, 0), dtype=np.int64)
        return np.stack(cols, axis=1)

    def to_json(self) -> dict:
        return {"cyclic_orders": list(self.cyclic_orders)}


def make_group(orders: Sequence[int], size_cap: int | None = None) -> GroupSpec:
    spec = GroupSpec(tuple(orders))
    check_cap(spec.order, size_cap)
    return spec


def check_element(spec: GroupSpec, a: Sequence[int]) -> GroupElement:
    """Validate ``a`` against ``spec`` and return it as a tuple of ints."""
    a = tuple(int(r) for r in a)
    if len(a) != spec.ndim:
        raise ShapeMismatch(
            f"element has {len(a)} coordinates, group has {spec.ndim}")
    for r, n in zip(a, spec.cyclic_orders):
        if not 0 <= r < n:
            raise IndexOutOfRange(f"residue {r} not reduced modulo {n}")
    return a


def zero(spec: GroupSpec) -> GroupElement:
    return (0,) * spec.ndim


def add(spec: GroupSpec, a: Sequence[int], b: Sequence[int]) -> GroupElement:
    a = check_element(spec, a)
    b = check_element(spec, b)
    return tuple((x + y) % n for x, y, n in zip(a, b, spec.cyclic_orders))


def negate(spec: GroupSpec, a: Sequence[int]) -> GroupElement:
    a = check_element(spec, a)
    return tuple((n - x) % n for x, n in zip(a, spec.cyclic_orders))


def subtract(spec: GroupSpec, a: Sequence[int], b: Sequence[int]) -> GroupElement:
    return add(spec, a, negate(spec, b))


def rank(spec: GroupSpec, a: Sequence[int]) -> int:
    a = check_element(spec, a)
    return sum(x * s for x, s in zip(a, spec.strides))


def unrank(spec: GroupSpec, k: int) -> GroupElement:
    k = int(k)
    if not 0 <= k < spec.order:
        raise IndexOutOfRange(f"rank {k} outside [0, {spec.order})")
    out = []
    for n in spec.cyclic_orders:
        k, r = divmod(k, n)
        out.append(r)
    return tuple(out)
