"""Characters of finite abelian groups and Laurent characters of the integers."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import _roots
from .errors import (
    ExponentCapExceeded,
    OverflowToInfinity,
    ZeroBase,
)
from .group import GroupSpec, check_cap, check_element, unrank

DEFAULT_EXPONENT_CAP = 10**6
BOUNDEDNESS_TOL = 1e-12
_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True)
class Character:
    """The character ``a -> exp(2 pi i sum_j t_j a_j / n_j)`` of ``spec``.

    ``frequencies`` are the ``t_j``; they obey the same constraints as group
    elements, since the dual of a product of cyclic groups is the product of
    their duals.
    """

    spec: GroupSpec
    frequencies: tuple[int, ...]
    _tables: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "frequencies", check_element(self.spec, self.frequencies))
        object.__setattr__(
            self, "_tables", tuple(_roots.roots(n) for n in self.spec.cyclic_orders))

    def __call__(self, a: Sequence[int]) -> complex:
        return eval_character(self, a)

    def is_trivial(self) -> bool:
        return not any(self.frequencies)

    def values(self) -> np.ndarray:
        """Tabulate the character over the whole group, in rank order."""
        out = np.ones(self.spec.order, dtype=complex)
        coords = self.spec.coordinates()
        for j, (t, n) in enumerate(zip(self.frequencies, self.spec.cyclic_orders)):
            if t:
                out *= self._tables[j][(t * coords[:, j]) % n]
        return out

    def to_json(self) -> dict:
        return {"frequencies": list(self.frequencies)}


def eval_character(chi: Character, a: Sequence[int]) -> complex:
    a = check_element(chi.spec, a)
    value = 1 + 0j
    for table, t, x, n in zip(chi._tables, chi.frequencies, a, chi.spec.cyclic_orders):
        k = (t * x) % n
        if k:
            value *= complex(table[k])
    return value


def dual_group(spec: GroupSpec, size_cap: int | None = None) -> Iterator[Character]:
    """All characters of ``spec``, in rank order of their frequency tuples."""
    check_cap(spec.order, size_cap)
    for k in range(spec.order):
        yield Character(spec, unrank(spec, k))


def character_table(spec: GroupSpec) -> np.ndarray:
    """``M[t, x] = chi_t(x)`` with both axes in rank order."""
    check_cap(spec.order * spec.order)
    coords = spec.coordinates()
    table = np.ones((spec.order, spec.order), dtype=complex)
    for j, n in enumerate(spec.cyclic_orders):
        if n > 1:
            c = coords[:, j]
            table *= _roots.roots(n)[np.outer(c, c) % n]
    return table


class Boundedness(enum.Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LaurentCharacter:
    """The homomorphism ``k -> z**k`` from the integers into nonzero complexes."""

    base: complex

    def __post_init__(self) -> None:
        z = complex(self.base)
        if z == 0:
            raise ZeroBase("the base of a Laurent character must be nonzero")
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise OverflowToInfinity(f"base {z!r} is not finite")
        object.__setattr__(self, "base", z)

    def __call__(self, k: int) -> complex:
        return eval_unbounded(self, k)

    def to_json(self) -> dict:
        return {"re": self.base.real, "im": self.base.imag}


def _power(z: complex, k: int, exponent_cap: int) -> complex:
    if abs(k) > exponent_cap:
        raise ExponentCapExceeded(f"exponent {k} exceeds cap {exponent_cap}")
    if k == 0:
        return 1 + 0j
    try:
        modulus = math.pow(abs(z), k)
    except OverflowError:
        raise OverflowToInfinity(f"|{z}|**{k} overflows") from None
    if math.isinf(modulus):
        raise OverflowToInfinity(f"|{z}|**{k} overflows")
    if modulus == 0.0:
        # the result must be a nonzero complex number
        raise OverflowToInfinity(f"|{z}|**{k} underflows to zero")
    if z.real == 0.0 or z.imag == 0.0:
        # on an axis: an exact quarter-turn rotation
        quarter = (0 if z.real > 0 else 2) if z.imag == 0.0 else (1 if z.imag > 0 else 3)
        return modulus * _QUARTER_TURNS[(quarter * k) % 4]
    phase = k * cmath.phase(z)
    return complex(modulus * math.cos(phase), modulus * math.sin(phase))


def eval_unbounded(phi: LaurentCharacter, k: int,
                   exponent_cap: int = DEFAULT_EXPONENT_CAP) -> complex:
    """``z**k`` via ``|z|**k`` and ``k*arg(z)``."""
    return _power(phi.base, int(k), exponent_cap)


def classify_character(phi: LaurentCharacter) -> Boundedness:
    if abs(abs(phi.base) - 1.0) <= BOUNDEDNESS_TOL:
        return Boundedness.BOUNDED
    return Boundedness.UNBOUNDED
