# coding: utf-8

"""
Half-open interval of admissible scale values with exact rational bounds.
"""

from __future__ import annotations


__all__ = ["ScaleInterval"]


import math

from pydantic import ConfigDict, field_validator

from jpegqf.types import Any, Fraction, Optional, Iterable
from jpegqf.util import format_fraction
from jpegqf.models.base import BaseModel


class ScaleInterval(BaseModel):
    """
    The half-open set ``[lo, hi)`` of scale values. Bounds are :py:class:`fractions.Fraction`
    instances (integers are converted), floats are rejected. *hi* can be *None* to denote an
    interval that is unbounded above. The interval is empty when ``lo >= hi``.

    .. code-block:: python

        iv = ScaleInterval(lo=Fraction(650, 16), hi=Fraction(850, 16))
        50 in iv
        # -> True
        iv.integers()
        # -> [41, 42, ..., 53]
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    lo: Fraction
    hi: Optional[Fraction] = None

    @field_validator("lo", "hi", mode="before")
    @classmethod
    def convert_bound(cls, value: Any) -> Any:
        if isinstance(value, bool) or isinstance(value, float):
            raise TypeError(f"interval bounds must be exact rationals, but got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        return value

    @classmethod
    def unbounded(cls, lo: Fraction | int) -> ScaleInterval:
        return cls(lo=lo, hi=None)

    @property
    def is_empty(self) -> bool:
        return self.hi is not None and self.lo >= self.hi

    @property
    def is_bounded(self) -> bool:
        return self.hi is not None

    @property
    def width(self) -> Fraction | None:
        """
        Width of the interval, *None* when unbounded and zero when empty.
        """
        if self.hi is None:
            return None
        return max(self.hi - self.lo, Fraction(0))

    def __contains__(self, value: int | Fraction) -> bool:
        if value < self.lo:
            return False
        return self.hi is None or value < self.hi

    def intersection(self, other: ScaleInterval) -> ScaleInterval:
        """
        Returns the intersection with an *other* interval, which may be empty.
        """
        if self.hi is None:
            hi = other.hi
        elif other.hi is None:
            hi = self.hi
        else:
            hi = min(self.hi, other.hi)

        return self.__class__(lo=max(self.lo, other.lo), hi=hi)

    def issubset(self, other: ScaleInterval) -> bool:
        """
        Returns whether this interval is contained in an *other* one. Empty intervals are subsets of
        every interval.
        """
        if self.is_empty:
            return True
        if self.lo < other.lo:
            return False
        if other.hi is None:
            return True
        return self.hi is not None and self.hi <= other.hi

    def integers(self, limit: int | None = None) -> list[int]:
        """
        Returns all integers inside the interval in ascending order. Unbounded intervals require
        an inclusive upper *limit*.
        """
        hi = self.hi
        if hi is None:
            if limit is None:
                raise ValueError("listing integers of an unbounded interval requires a limit")
            hi = Fraction(limit + 1)
        elif limit is not None:
            hi = min(hi, Fraction(limit + 1))

        return list(range(math.ceil(self.lo), math.ceil(hi)))

    def __str__(self) -> str:
        if self.is_empty:
            return f"empty [{format_fraction(self.lo)}, {format_fraction(self.hi)})"
        return f"[{format_fraction(self.lo)}, {format_fraction(self.hi, unbounded='+inf')})"

    @classmethod
    def intersect_all(cls, intervals: Iterable[ScaleInterval]) -> ScaleInterval:
        """
        Intersects all *intervals*, which must not be empty.
        """
        intervals = list(intervals)
        if not intervals:
            raise ValueError("cannot intersect an empty collection of intervals")

        his = [iv.hi for iv in intervals if iv.hi is not None]
        return cls(lo=max(iv.lo for iv in intervals), hi=min(his) if his else None)
