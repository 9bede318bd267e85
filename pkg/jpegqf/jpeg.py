# coding: utf-8

"""
Minimal JPEG marker segment scanner and DQT (define quantization tables) parser. Only the header
region up to the first start-of-scan marker is read, entropy-coded data is never touched.
"""

from __future__ import annotations


__all__ = [
    "Marker", "Precision", "Segment", "DqtTable", "JpegError", "NotAJpegError", "CorruptFileError",
    "MalformedDqtError", "NoTablesError", "ZIGZAG_ORDER", "scan_segments", "parse_dqt",
    "dezigzag", "rezigzag", "extract_dqt_tables", "pair_tables", "extract_tables", "read_source",
]


import sys
import enum

from pydantic import Field, model_validator

from jpegqf.types import Optional, Sequence, Iterable, StrictInt, Annotated, Ge, Le, MAX_STEP_8
from jpegqf.models.base import BaseModel
from jpegqf.models.matrix import Channel, QuantMatrix, TablePair
from jpegqf.logger import get_logger


logger = get_logger(__name__)


class Marker(enum.IntEnum):
    """
    Second octets of the JPEG markers the scanner knows by name.
    """

    TEM = 0x01
    SOF0 = 0xC0
    SOF1 = 0xC1
    SOF2 = 0xC2
    DHT = 0xC4
    RST0 = 0xD0
    RST7 = 0xD7
    SOI = 0xD8
    EOI = 0xD9
    SOS = 0xDA
    DQT = 0xDB
    DRI = 0xDD
    APP0 = 0xE0
    APP15 = 0xEF
    COM = 0xFE

    @classmethod
    def is_standalone(cls, marker: int) -> bool:
        """
        Whether *marker* is not followed by a length field and payload.
        """
        return marker == cls.TEM or cls.RST0 <= marker <= cls.EOI

    @classmethod
    def label(cls, marker: int) -> str:
        try:
            return cls(marker).name
        except ValueError:
            return f"0xFF{marker:02X}"


class Precision(enum.IntEnum):

    eight_bit = 0
    sixteen_bit = 1

    @property
    def size(self) -> int:
        """
        Number of octets per step.
        """
        return self.value + 1

    def __str__(self) -> str:
        return "8-bit" if self is Precision.eight_bit else "16-bit"


#: Natural (row-major) index of the cell at each zigzag position.
# fmt: off
ZIGZAG_ORDER = (
    0, 1, 8, 16, 9, 2, 3, 10,
    17, 24, 32, 25, 18, 11, 4, 5,
    12, 19, 26, 33, 40, 48, 41, 34,
    27, 20, 13, 6, 7, 14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36,
    29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46,
    53, 60, 61, 54, 47, 55, 62, 63,
)
# fmt: on


class JpegError(Exception):
    """
    Base class for exceptions that are raised when JPEG data cannot be interpreted. The byte
    *offset* at which the problem was detected is added to the message when known.
    """

    def __init__(self, msg: str, offset: int | None = None) -> None:
        if offset is not None:
            msg = f"{msg} (at offset {offset})"

        super().__init__(msg)

        self.offset = offset


class NotAJpegError(JpegError):
    """
    An exception which is raised when data does not start with the start-of-image marker.
    """


class CorruptFileError(JpegError):
    """
    An exception which is raised when the marker structure of the header is broken.
    """


class MalformedDqtError(JpegError):
    """
    An exception which is raised when a DQT payload violates the table layout.
    """


class NoTablesError(JpegError):
    """
    An exception which is raised when no DQT segment precedes the first scan.
    """


class Segment(BaseModel):
    """
    A marker segment. *offset* is the position of its 0xFF octet, *payload* excludes the length
    field and is *None* for standalone markers.
    """

    marker: Annotated[StrictInt, Ge(0x01), Le(0xFE)]
    offset: Annotated[StrictInt, Ge(0)]
    payload: Optional[bytes] = None

    @property
    def name(self) -> str:
        return Marker.label(self.marker)

    @property
    def length(self) -> int | None:
        """
        Declared segment length, which counts the two length octets themselves.
        """
        return None if self.payload is None else len(self.payload) + 2


class DqtTable(BaseModel):
    """
    One table of a DQT segment with steps in natural order.
    """

    precision: Precision
    table_id: Annotated[StrictInt, Ge(0), Le(3)]
    matrix: QuantMatrix
    offset: Optional[Annotated[StrictInt, Ge(0)]] = Field(default=None, repr=False)

    @model_validator(mode="after")
    def validate_eight_bit_steps(self) -> DqtTable:
        if self.precision is Precision.eight_bit and not self.matrix.is_baseline:
            raise ValueError(
                f"8-bit table {self.table_id} contains step {self.matrix.max_step} > {MAX_STEP_8}",
            )
        return self

    @property
    def channel(self) -> Channel | None:
        """
        Conventional channel of the table id, *None* for ids 2 and 3.
        """
        for channel in Channel:
            if channel.table_id == self.table_id:
                return channel
        return None


def dezigzag(seq: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """
    Reorders 64 values from zigzag scan order into 8 rows in natural order.

    .. code-block:: python

        grid = dezigzag(range(64))
        grid[0][:3], grid[1][0], grid[2][0]
        # -> (0, 1, 5), 2, 3
    """
    seq = list(seq)
    if len(seq) != 64:
        raise ValueError(f"zigzag sequence must contain 64 values, but got {len(seq)}")

    flat = [0] * 64
    for k, v in enumerate(seq):
        flat[ZIGZAG_ORDER[k]] = v

    return tuple(tuple(flat[r * 8:(r + 1) * 8]) for r in range(8))


def rezigzag(grid: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """
    Inverse of :py:func:`dezigzag`, flattening 8 rows in natural order into zigzag scan order.
    """
    rows = [list(row) for row in grid]
    if len(rows) != 8 or any(len(row) != 8 for row in rows):
        raise ValueError("grid must consist of 8 rows with 8 values each")

    flat = [v for row in rows for v in row]
    return tuple(flat[n] for n in ZIGZAG_ORDER)


def scan_segments(data: bytes) -> list[Segment]:
    """
    Scans the header of JPEG *data* and returns all marker segments following the start-of-image
    marker up to and including the first start-of-scan segment. Fill octets (0xFF) preceding a
    marker are skipped. The scan also ends at an end-of-image marker or at the end of *data*.
    """
    data = bytes(data)
    if data[:2] != b"\xff\xd8":
        raise NotAJpegError("data does not start with the SOI marker 0xFFD8", offset=0)

    segments = []
    pos = 2
    n = len(data)
    while pos < n:
        if data[pos] != 0xFF:
            raise CorruptFileError(
                f"expected marker, but found octet 0x{data[pos]:02X}",
                offset=pos,
            )

        # skip fill octets, the last 0xFF introduces the marker
        start = pos
        while pos < n and data[pos] == 0xFF:
            pos += 1
        if pos >= n:
            raise CorruptFileError("data ends within marker fill octets", offset=start)
        offset = pos - 1
        marker = data[pos]
        pos += 1

        if marker == 0x00:
            raise CorruptFileError("stuffed zero octet outside of scan data", offset=offset)

        if Marker.is_standalone(marker):
            segments.append(Segment(marker=marker, offset=offset))
            logger.debug(f"found standalone marker {Marker.label(marker)} at {offset}")
            if marker == Marker.EOI:
                break
            continue

        if pos + 2 > n:
            raise CorruptFileError(
                f"segment {Marker.label(marker)} is truncated before its length field",
                offset=offset,
            )
        length = (data[pos] << 8) | data[pos + 1]
        if length < 2:
            raise CorruptFileError(
                f"segment {Marker.label(marker)} declares invalid length {length}",
                offset=offset,
            )
        if pos + length > n:
            raise CorruptFileError(
                f"segment {Marker.label(marker)} declares length {length}, but only {n - pos} "
                "octets remain",
                offset=offset,
            )

        segments.append(Segment(marker=marker, offset=offset, payload=data[pos + 2:pos + length]))
        logger.debug(f"found segment {Marker.label(marker)} of length {length} at {offset}")
        pos += length

        if marker == Marker.SOS:
            break

    return segments


def parse_dqt(payload: bytes, offset: int | None = None) -> list[DqtTable]:
    """
    Parses all tables of a DQT segment *payload* in declaration order. *offset* is the position of
    the payload in the file and only used in messages.
    """
    payload = bytes(payload)
    if not payload:
        raise MalformedDqtError("DQT segment contains no table", offset=offset)

    tables = []
    pos = 0
    while pos < len(payload):
        at = None if offset is None else offset + pos
        precision_id = payload[pos] >> 4
        table_id = payload[pos] & 0x0F
        if precision_id > 1:
            raise MalformedDqtError(f"invalid precision {precision_id}, expected 0 or 1", offset=at)
        if table_id > 3:
            raise MalformedDqtError(f"invalid table id {table_id}, expected 0 to 3", offset=at)

        precision = Precision(precision_id)
        size = 64 * precision.size
        body = payload[pos + 1:pos + 1 + size]
        if len(body) != size:
            raise MalformedDqtError(
                f"{precision!s} table {table_id} needs {size} octets, but only {len(body)} remain",
                offset=at,
            )

        if precision is Precision.eight_bit:
            values = list(body)
        else:
            values = [(body[k] << 8) | body[k + 1] for k in range(0, size, 2)]
        if 0 in values:
            raise MalformedDqtError(f"table {table_id} contains a zero step", offset=at)

        tables.append(DqtTable(
            precision=precision,
            table_id=table_id,
            matrix=QuantMatrix(steps=dezigzag(values)),
            offset=at,
        ))
        logger.debug(f"parsed {precision!s} quantization table {table_id}")
        pos += 1 + size

    return tables


def extract_dqt_tables(data: bytes) -> list[DqtTable]:
    """
    Returns all tables defined by DQT segments before the first scan, in declaration order.
    """
    tables = []
    for segment in scan_segments(data):
        if segment.marker == Marker.DQT and segment.payload is not None:
            tables.extend(parse_dqt(segment.payload, offset=segment.offset + 4))

    if not tables:
        raise NoTablesError("no DQT segment found before the first scan")

    return tables


def pair_tables(tables: Iterable[DqtTable]) -> TablePair:
    """
    Assigns DQT *tables* to the luminance (id 0) and chrominance (id 1) slots. When an id is
    defined more than once, the last definition wins. Tables with ids 2 and 3 are ignored.
    """
    pair = {}
    for table in tables:
        channel = table.channel
        if channel is None:
            logger.debug(f"ignoring quantization table with id {table.table_id}")
            continue
        pair[channel.value] = table.matrix

    return TablePair(**pair)


def extract_tables(data: bytes) -> TablePair:
    """
    Extracts the luminance and chrominance tables from JPEG *data*, see :py:func:`pair_tables`.
    """
    return pair_tables(extract_dqt_tables(data))


def read_source(path: str) -> bytes:
    """
    Returns the content of the file at *path*, or of standard input when *path* is ``"-"``.
    """
    if path == "-":
        return sys.stdin.buffer.read()

    with open(path, "rb") as f:
        return f.read()
