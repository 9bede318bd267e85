# coding: utf-8

"""
Outcomes of the identification of a quality factor and their exit status codes.
"""

from __future__ import annotations


__all__ = [
    "Diff", "IdentificationOutcome", "Exact", "CandidateMismatch", "NoCandidate",
    "STATUS_NO_CANDIDATE", "STATUS_MISMATCH", "STATUS_IO_ERROR",
]


from abc import abstractmethod

from pydantic import Field, field_validator

from jpegqf.types import ClassVar, List, QualityFactor, GridIndex, StrictInt
from jpegqf.models.base import BaseModel
from jpegqf.models.matrix import Channel, ChannelMask
from jpegqf.models.interval import ScaleInterval


#: Exit status when no quality factor is compatible with the tables.
STATUS_NO_CANDIDATE = 101

#: Exit status when candidates exist but none matches all steps.
STATUS_MISMATCH = 102

#: Exit status when the file cannot be read or parsed.
STATUS_IO_ERROR = 200


class Diff(BaseModel):
    """
    A single position at which an observed step differs from the expected standard step.
    """

    channel: Channel
    i: GridIndex
    j: GridIndex
    observed: StrictInt
    expected: StrictInt

    def __str__(self) -> str:
        return (
            f"{self.channel} ({self.i}, {self.j}): observed {self.observed}, "
            f"expected {self.expected}"
        )


class IdentificationOutcome(BaseModel):
    """
    Base class of all outcomes. Besides variant-specific fields, every outcome keeps the *mask* it
    was computed with, the narrowed *interval* of scale values and the ordered *candidates*.
    """

    kind: ClassVar[str] = ""

    mask: ChannelMask
    interval: ScaleInterval
    candidates: List[QualityFactor] = Field(default_factory=list)

    @property
    @abstractmethod
    def status(self) -> int:
        """
        Canonical exit status of the outcome.
        """
        # must be implemented by subclasses
        ...

    @property
    def is_exact(self) -> bool:
        return False


class Exact(IdentificationOutcome):

    kind: ClassVar[str] = "exact"

    quality: QualityFactor

    @property
    def status(self) -> int:
        return self.quality

    @property
    def is_exact(self) -> bool:
        return True


class CandidateMismatch(IdentificationOutcome):

    kind: ClassVar[str] = "mismatch"

    quality: QualityFactor
    diffs: List[Diff]

    @field_validator("diffs", mode="after")
    @classmethod
    def validate_diffs(cls, diffs: list[Diff]) -> list[Diff]:
        if not diffs:
            raise ValueError("a candidate mismatch requires at least one diff")
        return diffs

    @property
    def status(self) -> int:
        return STATUS_MISMATCH


class NoCandidate(IdentificationOutcome):

    kind: ClassVar[str] = "none"

    @property
    def status(self) -> int:
        return STATUS_NO_CANDIDATE
