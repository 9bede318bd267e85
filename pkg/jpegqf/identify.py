# coding: utf-8

"""
Identification of the standard quality factor of quantization tables in two steps. First, every
step bounds the admissible scale values, and the intersection of all bounds yields candidate
quality factors. Second, candidates are verified step by step against the synthesized standard
matrices.
"""

from __future__ import annotations


__all__ = [
    "step_interval", "narrow", "candidates", "verify", "identify", "identify_bytes",
    "identify_file",
]


from jpegqf.types import Fraction, MIN_QUALITY, MAX_QUALITY, MAX_STEP_8, MAX_STEP_16
from jpegqf.models.matrix import ChannelMask, TablePair
from jpegqf.models.interval import ScaleInterval
from jpegqf.models.outcome import (
    Diff, IdentificationOutcome, Exact, CandidateMismatch, NoCandidate,
)
from jpegqf.ijg import base_matrix, quality_scaling, synthesize_pair
from jpegqf.jpeg import extract_tables, read_source
from jpegqf.logger import get_logger


logger = get_logger(__name__)


def step_interval(q: int, d: int) -> ScaleInterval:
    """
    Returns the interval of scale values compatible with the observed step *q* at a position
    whose default step is *d*:

    .. code-block:: text

        (100 * q - 150) / d  <=  S  <  (100 * q + 50) / d

    The band is wide enough to cover both rounding conventions found in encoders. A step at the
    8-bit ceiling of 255 may be the result of clamping, so its interval is unbounded above.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError(f"default step must be a positive integer, but got {d!r}")
    if d > MAX_STEP_8:
        raise ValueError(f"default step must not exceed {MAX_STEP_8}, but got {d}")
    if isinstance(q, bool) or not isinstance(q, int) or not (1 <= q <= MAX_STEP_16):
        raise ValueError(f"step must be an integer in [1, {MAX_STEP_16}], but got {q!r}")

    lo = Fraction(100 * q - 150, d)
    if q == MAX_STEP_8:
        return ScaleInterval(lo=lo, hi=None)

    return ScaleInterval(lo=lo, hi=Fraction(100 * q + 50, d))


def narrow(tables: TablePair, mask: ChannelMask | None = None) -> ScaleInterval:
    """
    Intersects the intervals of all steps of the tables selected by *mask* (both channels by
    default). The result may be empty. A :py:class:`~jpegqf.models.matrix.MissingTableError` is
    raised when a selected table is absent.
    """
    if mask is None:
        mask = ChannelMask()

    intervals = []
    for channel, matrix in tables.select(mask):
        base = base_matrix(channel)
        intervals.extend(
            step_interval(q, base[i - 1][j - 1])
            for i, j, q in matrix.positions()
        )

    interval = ScaleInterval.intersect_all(intervals)
    logger.debug(f"narrowed scale interval for {mask}: {interval}")

    return interval


def candidates(interval: ScaleInterval) -> list[int]:
    """
    Returns all quality factors whose scale value lies inside *interval*, in decreasing order.
    """
    if interval.is_empty:
        return []

    return [
        f for f in range(MAX_QUALITY, MIN_QUALITY - 1, -1)
        if quality_scaling(f) in interval
    ]


def verify(f: int, tables: TablePair, mask: ChannelMask | None = None) -> list[Diff]:
    """
    Compares the tables selected by *mask* (both channels by default) step by step with the
    standard matrices of the quality factor *f* and returns all differing positions. An empty list
    denotes an exact match.
    """
    if mask is None:
        mask = ChannelMask()

    expected = synthesize_pair(f)

    diffs = []
    for channel, matrix in tables.select(mask):
        for (i, j, observed), step in zip(matrix.positions(), expected.require(channel).flat):
            if observed != step:
                diffs.append(Diff(channel=channel, i=i, j=j, observed=observed, expected=step))

    logger.debug(f"verification against quality factor {f}: {len(diffs)} differing step(s)")

    return diffs


def identify(tables: TablePair, mask: ChannelMask | None = None) -> IdentificationOutcome:
    """
    Identifies the standard quality factor of *tables* using the channels selected by *mask* (both
    by default).

    Candidates are verified in decreasing order and the first exact match is returned as
    :py:class:`~jpegqf.models.outcome.Exact`. When all candidates mismatch, the one with the fewest
    differing steps is returned as :py:class:`~jpegqf.models.outcome.CandidateMismatch`, ties
    going to the larger quality factor. Without any candidate, a
    :py:class:`~jpegqf.models.outcome.NoCandidate` is returned.
    """
    if mask is None:
        mask = ChannelMask()

    interval = narrow(tables, mask)
    found = candidates(interval)
    logger.debug(f"candidate quality factors: {found}")

    common = {"mask": mask, "interval": interval, "candidates": found}
    if not found:
        return NoCandidate(**common)

    best: tuple[int, list[Diff]] | None = None
    for f in found:
        diffs = verify(f, tables, mask)
        if not diffs:
            return Exact(quality=f, **common)
        if best is None or len(diffs) < len(best[1]):
            best = (f, diffs)

    assert best is not None
    return CandidateMismatch(quality=best[0], diffs=best[1], **common)


def identify_bytes(data: bytes, mask: ChannelMask | None = None) -> IdentificationOutcome:
    """
    Extracts the tables from JPEG *data* and identifies their quality factor.
    """
    return identify(extract_tables(data), mask)


def identify_file(path: str, mask: ChannelMask | None = None) -> IdentificationOutcome:
    """
    Reads the JPEG file at *path* (``"-"`` for standard input) and identifies its quality factor.
    """
    return identify_bytes(read_source(path), mask)
