"""Harmonic analysis on finite abelian groups and the base-n sequence group."""

__version__ = "0.1.0"

from .dual import (
    Boundedness,
    Character,
    LaurentCharacter,
    character_table,
    classify_character,
    dual_group,
    eval_character,
    eval_unbounded,
)
from .errors import *  # noqa: F401,F403
from .functions import GroupFunction, SpectrumFunction
from .group import (
    GroupSpec,
    add,
    make_group,
    negate,
    rank,
    subtract,
    unrank,
    zero,
)
from .haar import HaarWeight, check_invariance, integrate, uniqueness_oracle
from .profinite import (
    CylinderFunction,
    Prefix,
    SequenceGroupSpec,
    depth_characters,
    haar_integrate_cylinder,
    in_neighborhood,
    refine,
    transform_cylinder,
    truncation_group,
)
from .transform import (
    convolve,
    fourier,
    fourier_coefficient,
    fourier_fast,
    fourier_laplace_integers,
    fourier_naive,
    inverse_fourier,
    translate,
)
