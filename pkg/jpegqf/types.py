# coding: utf-8

"""
Custom type definitions and shorthands to simplify imports of types that are spread across multiple
packages.
"""

from __future__ import annotations


__all__ = []


from fractions import Fraction  # noqa
from typing import (  # noqa
    Any, Union, TypeVar, ClassVar, List, Tuple, Sequence, Dict, Callable, Iterable, Generator,
    Optional, Literal, NoReturn,
)

from typing_extensions import Annotated  # noqa
from annotated_types import Ge, Le, Len  # noqa
from pydantic import StrictInt, StrictStr, StrictBool  # noqa


#: Lowest and highest IJG quality factor.
MIN_QUALITY = 1
MAX_QUALITY = 100

#: Largest scale value, reached at quality factor 1.
MAX_SCALE = 5000

#: Largest step of 8-bit (baseline) and 16-bit quantization tables.
MAX_STEP_8 = 255
MAX_STEP_16 = 65535

#: Strict integer quality factor in [1, 100].
QualityFactor = Annotated[StrictInt, Ge(MIN_QUALITY), Le(MAX_QUALITY)]

#: Strict positive quantization step that fits into a 16-bit table.
Step = Annotated[StrictInt, Ge(1), Le(MAX_STEP_16)]

#: Strict 1-based row or column index of an 8x8 grid.
GridIndex = Annotated[StrictInt, Ge(1), Le(8)]

#: Strict non-empty string.
NonEmptyStrictStr = Annotated[StrictStr, Len(min_length=1)]

#: Generic type variable, more stringent than Any.
T = TypeVar("T")
