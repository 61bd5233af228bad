"""The compact group of base-n digit sequences, handled through finite truncations.

A point is only ever seen through a :class:`Prefix` (its first ``l`` digits),
and a function through a :class:`CylinderFunction` (a table over the depth-l
truncation ``(Z/n)^l``).  Haar measure is fixed at total mass one so that
integrals do not depend on the depth a function is represented at.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .dual import Character, dual_group
from .errors import DepthTooSmall, IndexOutOfRange, InvalidBase, ShapeMismatch
from .functions import GroupFunction, SpectrumFunction
from .group import GroupSpec, check_cap, make_group
from .haar import HaarWeight, integrate
from .transform import fourier_fast


@dataclass(frozen=True)
class SequenceGroupSpec:
    base: int

    def __post_init__(self) -> None:
        if int(self.base) < 2:
            raise InvalidBase(f"sequence group base must be >= 2, got {self.base}")
        object.__setattr__(self, "base", int(self.base))


@dataclass(frozen=True)
class Prefix:
    """The first ``depth`` digits of a sequence; names its depth-l neighborhood."""

    spec: SequenceGroupSpec
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        digits = tuple(int(d) for d in self.digits)
        for d in digits:
            if not 0 <= d < self.spec.base:
                raise IndexOutOfRange(f"digit {d} not reduced modulo {self.spec.base}")
        object.__setattr__(self, "digits", digits)

    @property
    def depth(self) -> int:
        return len(self.digits)

    def truncate(self, l: int) -> Prefix:
        if l > self.depth:
            raise DepthTooSmall(f"prefix of depth {self.depth} cannot be cut to {l}")
        return Prefix(self.spec, self.digits[:l])


def truncation_group(spec: SequenceGroupSpec, l: int, size_cap: int | None = None) -> GroupSpec:
    if l < 0:
        raise DepthTooSmall(f"depth must be >= 0, got {l}")
    check_cap(spec.base**l, size_cap)
    return make_group([spec.base] * l, size_cap)


def in_neighborhood(x: Prefix, y: Prefix, l: int) -> bool:
    """Whether ``y`` lies in the ``l``-th standard neighborhood of ``x``."""
    if x.spec != y.spec:
        raise ShapeMismatch("prefixes belong to different sequence groups")
    if l < 0 or x.depth < l or y.depth < l:
        raise DepthTooSmall(f"need prefixes of depth >= {l}, got {x.depth} and {y.depth}")
    return x.digits[:l] == y.digits[:l]


def prefixes(spec: SequenceGroupSpec, l: int) -> Iterator[Prefix]:
    """All depth-l prefixes, in rank order (first digit fastest)."""
    g = truncation_group(spec, l)
    for x in g.elements():
        yield Prefix(spec, x)


@dataclass(frozen=True, eq=False)
class CylinderFunction:
    """A function of a sequence that reads only its first ``depth`` digits."""

    spec: SequenceGroupSpec
    depth: int
    table: GroupFunction

    def __post_init__(self) -> None:
        g = truncation_group(self.spec, self.depth)
        if self.table.spec != g:
            raise ShapeMismatch(
                f"table lives on {self.table.spec.cyclic_orders}, expected {g.cyclic_orders}")

    @classmethod
    def from_values(cls, spec: SequenceGroupSpec, depth: int, values) -> CylinderFunction:
        return cls(spec, depth, GroupFunction(truncation_group(spec, depth), values))

    def __call__(self, x: Prefix) -> complex:
        if x.depth < self.depth:
            raise DepthTooSmall(f"point known to depth {x.depth}, function needs {self.depth}")
        return self.table[x.digits[:self.depth]]

    @property
    def values(self) -> np.ndarray:
        return self.table.values


def refine(cf: CylinderFunction, l2: int) -> CylinderFunction:
    """Re-express ``cf`` on the depth-``l2`` truncation."""
    if l2 < cf.depth:
        raise DepthTooSmall(f"cannot refine depth {cf.depth} down to {l2}")
    if l2 == cf.depth:
        return cf
    g = truncation_group(cf.spec, l2)
    # the extra digits are the slow coordinates in rank order
    return CylinderFunction(cf.spec, l2, GroupFunction(g, np.tile(cf.values, g.order // cf.table.spec.order)))


def cylinder_weight(cf: CylinderFunction) -> HaarWeight:
    return HaarWeight.normalized(cf.table.spec)


def haar_integrate_cylinder(cf: CylinderFunction) -> complex:
    return integrate(cylinder_weight(cf), cf.table)


def depth_characters(spec: SequenceGroupSpec, l: int) -> Iterator[Character]:
    return dual_group(truncation_group(spec, l))


def transform_cylinder(cf: CylinderFunction) -> SpectrumFunction:
    """Transform on the depth-l dual (for base 2, a Walsh-Hadamard transform over 2**l)."""
    return fourier_fast(cylinder_weight(cf), cf.table)


def restrict_spectrum(spectrum: SpectrumFunction, base: int, l: int) -> SpectrumFunction:
    """Keep the characters whose frequencies vanish beyond coordinate ``l``."""
    g = make_group([base] * l)
    orders = spectrum.spec.cyclic_orders
    if orders[:l] != g.cyclic_orders or any(n != base for n in orders):
        raise ShapeMismatch(f"spectrum on {orders} is not a base-{base} truncation of depth >= {l}")
    # those characters occupy the first base**l ranks
    return SpectrumFunction(g, spectrum.values[:g.order])


def lift_frequencies(chi: Character, l2: int) -> Sequence[int]:
    """Frequencies of ``chi`` viewed on a deeper truncation (zero-padded)."""
    if l2 < chi.spec.ndim:
        raise DepthTooSmall(f"cannot lift a depth-{chi.spec.ndim} character to depth {l2}")
    return chi.frequencies + (0,) * (l2 - chi.spec.ndim)
