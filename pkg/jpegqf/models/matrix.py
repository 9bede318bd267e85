# coding: utf-8

"""
Quantization matrices, channels and the selection of channels used for identification.
"""

from __future__ import annotations


__all__ = ["Channel", "QuantMatrix", "ChannelMask", "TablePair", "MissingTableError"]


import enum

from pydantic import field_validator, model_validator

from jpegqf.types import (
    Any, Tuple, Optional, Generator, Iterable, Step, StrictBool, MAX_STEP_8,
)
from jpegqf.util import format_grid
from jpegqf.models.base import BaseModel


class Channel(enum.Enum):

    luminance = "luminance"
    chrominance = "chrominance"

    def __str__(self) -> str:
        return self.value

    @property
    def table_id(self) -> int:
        """
        Conventional DQT table id of the channel as written by IJG-derived encoders.
        """
        return 0 if self is Channel.luminance else 1

    @property
    def bit(self) -> int:
        """
        Bit of the channel in the channel argument of the command line.
        """
        return 1 if self is Channel.luminance else 2


class MissingTableError(ValueError):
    """
    An exception which is raised when a table selected by a :py:class:`ChannelMask` is absent.
    """

    def __init__(self, channel: Channel, msg: str | None = None) -> None:
        if msg is None:
            msg = f"no {channel} quantization table available, but it is selected"

        super().__init__(msg)

        self.channel = channel


class QuantMatrix(BaseModel):
    """
    An 8x8 grid of quantization steps in natural (row-major) order. The model accepts either nested
    rows or a flat sequence of 64 steps. Positions exposed by methods are 1-based ``(i, j)`` pairs
    with *i* the row and *j* the column.

    .. code-block:: python

        m = QuantMatrix(steps=range(1, 65))
        m.step(1, 2)
        # -> 2
        m.step(8, 8)
        # -> 64
    """

    steps: Tuple[Tuple[Step, ...], ...]

    @field_validator("steps", mode="before")
    @classmethod
    def convert_steps(cls, steps: Any) -> Any:
        if isinstance(steps, (str, bytes)):
            return steps

        try:
            steps = list(steps)
        except TypeError:
            return steps

        # flat sequences are reshaped into rows
        if len(steps) == 64 and not any(isinstance(v, (list, tuple)) for v in steps):
            return tuple(tuple(steps[r * 8:(r + 1) * 8]) for r in range(8))

        return tuple(tuple(row) if isinstance(row, Iterable) else row for row in steps)

    @field_validator("steps", mode="after")
    @classmethod
    def validate_shape(cls, steps: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if len(steps) != 8 or any(len(row) != 8 for row in steps):
            shape = f"{len(steps)}x{','.join(str(len(row)) for row in steps)}"
            raise ValueError(f"quantization matrix must have 8x8 steps, but got shape {shape}")
        return steps

    @classmethod
    def constant(cls, value: int) -> QuantMatrix:
        """
        Returns a matrix whose 64 steps all equal *value*.
        """
        return cls(steps=[value] * 64)

    @property
    def flat(self) -> tuple[int, ...]:
        """
        All 64 steps in natural order.
        """
        return tuple(v for row in self.steps for v in row)

    @property
    def max_step(self) -> int:
        return max(self.flat)

    @property
    def is_baseline(self) -> bool:
        """
        Whether all steps fit into an 8-bit table.
        """
        return self.max_step <= MAX_STEP_8

    def step(self, i: int, j: int) -> int:
        """
        Returns the step at the 1-based position *i*, *j*.
        """
        if not (1 <= i <= 8 and 1 <= j <= 8):
            raise ValueError(f"position ({i}, {j}) is outside of the 8x8 grid")
        return self.steps[i - 1][j - 1]

    def positions(self) -> Generator[tuple[int, int, int], None, None]:
        """
        Yields ``(i, j, step)`` for all 64 positions in natural order.
        """
        for i, row in enumerate(self.steps, 1):
            for j, v in enumerate(row, 1):
                yield i, j, v

    def replace(self, i: int, j: int, value: int) -> QuantMatrix:
        """
        Returns a new matrix with the step at the 1-based position *i*, *j* set to *value*.
        """
        self.step(i, j)
        rows = [list(row) for row in self.steps]
        rows[i - 1][j - 1] = value
        return self.__class__(steps=rows)

    def format(self, indent: str = "", highlight: set[tuple[int, int]] | None = None) -> str:
        return format_grid(self.steps, indent=indent, highlight=highlight)


class ChannelMask(BaseModel):
    """
    Selection of the channels whose tables take part in identification. The bit encoding of the
    command line is 1 for luminance only, 2 for chrominance only, and 3 for both.
    """

    use_luminance: StrictBool = True
    use_chrominance: StrictBool = True

    @model_validator(mode="after")
    def validate_any_channel(self) -> ChannelMask:
        if not (self.use_luminance or self.use_chrominance):
            raise ValueError("at least one channel must be selected")
        return self

    @classmethod
    def from_bits(cls, bits: int) -> ChannelMask:
        if isinstance(bits, bool) or bits not in (1, 2, 3):
            raise ValueError(f"channel bits must be 1, 2 or 3, but got {bits!r}")
        return cls(use_luminance=bool(bits & 1), use_chrominance=bool(bits & 2))

    @classmethod
    def from_channels(cls, *channels: Channel) -> ChannelMask:
        return cls(
            use_luminance=Channel.luminance in channels,
            use_chrominance=Channel.chrominance in channels,
        )

    @property
    def bits(self) -> int:
        return sum(c.bit for c in self.channels)

    @property
    def channels(self) -> tuple[Channel, ...]:
        """
        Selected channels, luminance first.
        """
        return tuple(
            c for c, use in ((Channel.luminance, self.use_luminance),
                             (Channel.chrominance, self.use_chrominance))
            if use
        )

    def __str__(self) -> str:
        return "+".join(map(str, self.channels))


class TablePair(BaseModel):
    """
    Carrier of the luminance and chrominance tables of an image, either of which may be absent.
    """

    luminance: Optional[QuantMatrix] = None
    chrominance: Optional[QuantMatrix] = None

    def get(self, channel: Channel) -> QuantMatrix | None:
        return self.luminance if channel is Channel.luminance else self.chrominance

    def require(self, channel: Channel) -> QuantMatrix:
        """
        Returns the table of *channel* and raises a :py:class:`MissingTableError` when it is absent.
        """
        matrix = self.get(channel)
        if matrix is None:
            raise MissingTableError(channel)
        return matrix

    def select(self, mask: ChannelMask) -> list[tuple[Channel, QuantMatrix]]:
        """
        Returns ``(channel, matrix)`` pairs for all channels selected by *mask*.
        """
        return [(channel, self.require(channel)) for channel in mask.channels]

    def replace(self, channel: Channel, matrix: QuantMatrix | None) -> TablePair:
        return self.__class__(**{**dict(self), channel.value: matrix})

    @property
    def available(self) -> ChannelMask | None:
        """
        Mask of the channels whose tables are present, or *None* when both are missing.
        """
        channels = [c for c in Channel if self.get(c) is not None]
        return ChannelMask.from_channels(*channels) if channels else None
