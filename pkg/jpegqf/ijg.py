# coding: utf-8

"""
IJG default quantization matrices and the synthesis of standard matrices for a quality factor.
All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations


__all__ = [
    "BaseTables", "LUMINANCE_BASE", "CHROMINANCE_BASE", "base_tables", "base_matrix",
    "quality_scaling", "synthesize_matrix", "synthesize_pair", "standard_matrices",
    "find_collisions",
]


import functools

from jpegqf.types import Dict, MIN_QUALITY, MAX_QUALITY, MAX_STEP_8
from jpegqf.models.base import BaseModel
from jpegqf.models.matrix import Channel, QuantMatrix, TablePair


# fmt: off
LUMINANCE_BASE = (
    (16, 11, 10, 16, 24, 40, 51, 61),
    (12, 12, 14, 19, 26, 58, 60, 55),
    (14, 13, 16, 24, 40, 57, 69, 56),
    (14, 17, 22, 29, 51, 87, 80, 62),
    (18, 22, 37, 56, 68, 109, 103, 77),
    (24, 35, 55, 64, 81, 104, 113, 92),
    (49, 64, 78, 87, 103, 121, 120, 101),
    (72, 92, 95, 98, 112, 100, 103, 99),
)

CHROMINANCE_BASE = (
    (17, 18, 24, 47, 99, 99, 99, 99),
    (18, 21, 26, 66, 99, 99, 99, 99),
    (24, 26, 56, 99, 99, 99, 99, 99),
    (47, 66, 99, 99, 99, 99, 99, 99),
    (99, 99, 99, 99, 99, 99, 99, 99),
    (99, 99, 99, 99, 99, 99, 99, 99),
    (99, 99, 99, 99, 99, 99, 99, 99),
    (99, 99, 99, 99, 99, 99, 99, 99),
)
# fmt: on


class BaseTables(BaseModel):
    """
    The two default matrices from which all standard tables are scaled.
    """

    luminance: QuantMatrix
    chrominance: QuantMatrix

    def get(self, channel: Channel) -> QuantMatrix:
        return self.luminance if channel is Channel.luminance else self.chrominance


@functools.lru_cache(maxsize=1)
def base_tables() -> BaseTables:
    """
    Returns the IJG default luminance and chrominance matrices.
    """
    return BaseTables(
        luminance=QuantMatrix(steps=LUMINANCE_BASE),
        chrominance=QuantMatrix(steps=CHROMINANCE_BASE),
    )


def base_matrix(channel: Channel) -> tuple[tuple[int, ...], ...]:
    """
    Returns the raw rows of the default matrix of *channel*.
    """
    return LUMINANCE_BASE if channel is Channel.luminance else CHROMINANCE_BASE


def _check_quality(f: int) -> None:
    if isinstance(f, bool) or not isinstance(f, int):
        raise ValueError(f"quality factor must be an integer, but got {f!r}")
    if not (MIN_QUALITY <= f <= MAX_QUALITY):
        raise ValueError(
            f"quality factor must be in [{MIN_QUALITY}, {MAX_QUALITY}], but got {f}",
        )


def quality_scaling(f: int) -> int:
    """
    Converts a quality factor *f* in [1, 100] to the percentage by which the default matrices are
    scaled: ``200 - 2 * f`` from 50 upwards and ``5000 // f`` below.

    .. code-block:: python

        quality_scaling(75)
        # -> 50
        quality_scaling(25)
        # -> 200
    """
    _check_quality(f)
    return 200 - 2 * f if f >= 50 else 5000 // f


def _scale_step(d: int, s: int) -> int:
    # integer division as done by libjpeg, clamped to the baseline range
    return min(max((d * s + 50) // 100, 1), MAX_STEP_8)


def synthesize_matrix(f: int, channel: Channel) -> QuantMatrix:
    """
    Returns the standard quantization matrix of *channel* for the quality factor *f*.
    """
    return synthesize_pair(f).require(channel)


def synthesize_pair(f: int) -> TablePair:
    """
    Returns the standard luminance and chrominance matrices for the quality factor *f*.
    """
    _check_quality(f)
    return standard_matrices()[f]


def _synthesize(f: int) -> TablePair:
    s = quality_scaling(f)
    return TablePair(**{
        channel.value: QuantMatrix(steps=[
            [_scale_step(d, s) for d in row]
            for row in base_matrix(channel)
        ])
        for channel in Channel
    })


@functools.lru_cache(maxsize=1)
def standard_matrices() -> Dict[int, TablePair]:
    """
    Returns the standard table pairs of all quality factors, mapped to the factor. The mapping is
    computed once.
    """
    return {f: _synthesize(f) for f in range(MIN_QUALITY, MAX_QUALITY + 1)}


def find_collisions(channel: Channel) -> list[tuple[int, ...]]:
    """
    Scans all quality factors and returns groups of factors, in ascending order, whose standard
    matrices of *channel* are identical. Factors with a unique matrix are not reported.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for f, pair in standard_matrices().items():
        groups.setdefault(pair.require(channel).flat, []).append(f)

    return sorted(tuple(fs) for fs in groups.values() if len(fs) > 1)
