# coding: utf-8

"""
Generation of minimal JPEG files that embed arbitrary quantization tables, used as test fixtures.
Files consist of header segments only, their scan carries no entropy-coded data.
"""

from __future__ import annotations


__all__ = [
    "FixtureTable", "Perturbation", "FixtureSpec", "write_minimal_jpeg", "standard_corpus",
    "perturb", "random_perturbations", "write_fixtures", "load_manifest",
]


import os
import random

import yaml
from pydantic import Field, field_validator, model_validator

from jpegqf.types import (
    Any, List, Optional, Sequence, Iterable, Annotated, StrictInt, Ge, Le, QualityFactor,
    GridIndex, Step, MIN_QUALITY, MAX_QUALITY, MAX_STEP_8, MAX_STEP_16,
)
from jpegqf.util import create_hash
from jpegqf.models.base import BaseModel
from jpegqf.models.matrix import Channel, QuantMatrix, TablePair, MissingTableError
from jpegqf.models.outcome import STATUS_IO_ERROR
from jpegqf.ijg import synthesize_pair
from jpegqf.jpeg import Marker, Precision, rezigzag
from jpegqf.identify import identify
from jpegqf.logger import get_logger
import jpegqf.settings as settings


logger = get_logger(__name__)

#: Name of the manifest written next to fixture files.
MANIFEST_NAME = "manifest.yaml"


class FixtureTable(BaseModel):

    table_id: Annotated[StrictInt, Ge(0), Le(3)]
    matrix: QuantMatrix
    precision: Precision = Precision.eight_bit

    @model_validator(mode="after")
    def validate_eight_bit_steps(self) -> FixtureTable:
        if self.precision is Precision.eight_bit and not self.matrix.is_baseline:
            raise ValueError(
                f"8-bit fixture table {self.table_id} contains step {self.matrix.max_step} > "
                f"{MAX_STEP_8}",
            )
        return self

    @property
    def max_step(self) -> int:
        return MAX_STEP_8 if self.precision is Precision.eight_bit else MAX_STEP_16


class Perturbation(BaseModel):
    """
    Replacement of the step at 1-based position *i*, *j* of the table of *channel* by *value*.
    """

    channel: Channel
    i: GridIndex
    j: GridIndex
    value: Step

    @property
    def label(self) -> str:
        return f"{self.channel.value[:3]}{self.i}{self.j}v{self.value}"


class FixtureSpec(BaseModel):
    """
    Description of a fixture file: the tables to embed, written as one DQT segment each in the
    given order, plus *perturbations* applied on top of them. *tables* also accepts a
    :py:class:`~jpegqf.models.matrix.TablePair`, whose present tables get the conventional ids.
    *quality* records the standard quality factor the tables derive from, if any.
    """

    tables: List[FixtureTable] = Field(min_length=1)
    perturbations: List[Perturbation] = Field(default_factory=list)
    quality: Optional[QualityFactor] = None

    @field_validator("tables", mode="before")
    @classmethod
    def convert_table_pair(cls, tables: Any) -> Any:
        if not isinstance(tables, TablePair):
            return tables
        return [
            FixtureTable(table_id=channel.table_id, matrix=tables.get(channel))
            for channel in Channel
            if tables.get(channel) is not None
        ]

    @model_validator(mode="after")
    def validate_perturbations(self) -> FixtureSpec:
        for p in self.perturbations:
            table = self.find_table(p.channel)
            if table is None:
                raise ValueError(f"perturbation {p.label} targets missing {p.channel} table")
            if p.value > table.max_step:
                raise ValueError(
                    f"perturbation {p.label} exceeds the {table.precision!s} step range",
                )
        return self

    @classmethod
    def standard(cls, f: int) -> FixtureSpec:
        """
        Returns the spec of a file with both standard tables of quality factor *f*.
        """
        return cls(tables=synthesize_pair(f), quality=f)

    def find_table(self, channel: Channel) -> FixtureTable | None:
        # the last definition of an id wins, as in the parser
        for table in reversed(self.tables):
            if table.table_id == channel.table_id:
                return table
        return None

    def resolved_tables(self) -> list[FixtureTable]:
        """
        Returns the tables with all perturbations applied to the last definition of each id.
        """
        tables = list(self.tables)
        for p in self.perturbations:
            idx = max(n for n, t in enumerate(tables) if t.table_id == p.channel.table_id)
            tables[idx] = FixtureTable(
                table_id=tables[idx].table_id,
                precision=tables[idx].precision,
                matrix=tables[idx].matrix.replace(p.i, p.j, p.value),
            )
        return tables

    def table_pair(self) -> TablePair:
        """
        Returns the luminance and chrominance tables a parser extracts from the fixture.
        """
        pair = {}
        for table in self.resolved_tables():
            for channel in Channel:
                if channel.table_id == table.table_id:
                    pair[channel.value] = table.matrix
        return TablePair(**pair)

    @property
    def name(self) -> str:
        """
        File name stem that encodes the quality factor and the perturbations.
        """
        if self.quality is not None:
            stem = f"q{self.quality:03d}"
        else:
            h = create_hash([(t.table_id, int(t.precision), t.matrix.flat) for t in self.tables])
            stem = f"custom_{h}"
        return "_".join([stem] + [p.label for p in self.perturbations])

    def expected_status(self) -> int:
        """
        Exit status that the identification of the fixture with all its luminance and chrominance
        tables yields, or 200 when it defines neither of them.
        """
        pair = self.table_pair()
        try:
            return identify(pair, pair.available).status
        except MissingTableError:
            return STATUS_IO_ERROR


def _segment(marker: int, payload: bytes) -> bytes:
    return bytes((0xFF, marker)) + (len(payload) + 2).to_bytes(2, "big") + payload


def _dqt_payload(table: FixtureTable) -> bytes:
    steps = rezigzag(table.matrix.steps)
    body = b"".join(v.to_bytes(table.precision.size, "big") for v in steps)
    return bytes(((table.precision << 4) | table.table_id,)) + body


def write_minimal_jpeg(spec: FixtureSpec) -> bytes:
    """
    Returns the bytes of a minimal JPEG file for *spec*: SOI, one DQT segment per table, a frame
    header for an 8x8 image, a scan header and EOI. The frame has three components when a
    chrominance table (id 1) exists and a single component otherwise.
    """
    if not isinstance(spec, FixtureSpec):
        raise ValueError(f"expected a FixtureSpec, but got {spec!r}")

    tables = spec.resolved_tables()
    ids = [t.table_id for t in tables]

    # components as (component id, table id)
    if 1 in ids:
        luma_id = 0 if 0 in ids else 1
        components = [(1, luma_id), (2, 1), (3, 1)]
    else:
        components = [(1, ids[0])]

    # extended sequential frames allow 16-bit tables
    sof = Marker.SOF0 if all(t.precision is Precision.eight_bit for t in tables) else Marker.SOF1
    # 8-bit samples, 8 lines, 8 samples per line
    frame = bytes((8,)) + (8).to_bytes(2, "big") + (8).to_bytes(2, "big")
    frame += bytes((len(components),))
    for cid, tid in components:
        frame += bytes((cid, 0x11, tid))

    scan = bytes((len(components),))
    for cid, _ in components:
        scan += bytes((cid, 0x00))
    scan += bytes((0, 63, 0))

    data = bytes((0xFF, Marker.SOI))
    data += b"".join(_segment(Marker.DQT, _dqt_payload(t)) for t in tables)
    data += _segment(sof, frame)
    data += _segment(Marker.SOS, scan)
    data += bytes((0xFF, Marker.EOI))

    return data


def standard_corpus(f_range: Iterable[int]) -> list[tuple[int, bytes]]:
    """
    Returns ``(f, data)`` pairs of minimal JPEG files with both standard tables for every quality
    factor in *f_range*, in the given order.
    """
    qualities = list(f_range)
    for f in qualities:
        if isinstance(f, bool) or not isinstance(f, int) or not (MIN_QUALITY <= f <= MAX_QUALITY):
            raise ValueError(
                f"quality factors must be integers in [{MIN_QUALITY}, {MAX_QUALITY}], "
                f"but got {f!r}",
            )

    return [(f, write_minimal_jpeg(FixtureSpec.standard(f))) for f in qualities]


def perturb(spec: FixtureSpec, channel: Channel, i: int, j: int, delta: int) -> FixtureSpec:
    """
    Returns a new spec in which the step of *channel* at 1-based position *i*, *j* is changed by
    *delta*. *spec* itself is unchanged. A *delta* of zero returns an equal spec.
    """
    table = spec.find_table(channel)
    if table is None:
        raise ValueError(f"cannot perturb missing {channel} table")

    current = spec.table_pair().require(channel).step(i, j)
    value = current + delta
    if not (1 <= value <= table.max_step):
        raise ValueError(
            f"perturbing step {current} at {channel} ({i}, {j}) by {delta} leaves the "
            f"{table.precision!s} range [1, {table.max_step}]",
        )

    if delta == 0:
        return spec.model_copy()

    perturbation = Perturbation(channel=channel, i=i, j=j, value=value)
    return FixtureSpec(
        tables=spec.tables,
        perturbations=list(spec.perturbations) + [perturbation],
        quality=spec.quality,
    )


def random_perturbations(
    count: int,
    seed: int = 0,
    qualities: Sequence[int] = tuple(range(MIN_QUALITY, MAX_QUALITY + 1)),
    channels: Sequence[Channel] = tuple(Channel),
) -> list[FixtureSpec]:
    """
    Returns *count* standard specs, each with a single step changed by +1 or -1. Quality factors,
    channels, positions and signs are drawn from a generator seeded with *seed*. Steps at the
    bounds of the 8-bit range are only changed towards the inside.
    """
    rng = random.Random(seed)

    specs = []
    for _ in range(count):
        spec = FixtureSpec.standard(rng.choice(list(qualities)))
        channel = rng.choice(list(channels))
        i, j = rng.randint(1, 8), rng.randint(1, 8)
        step = spec.table_pair().require(channel).step(i, j)
        if step == 1:
            delta = 1
        elif step == MAX_STEP_8:
            delta = -1
        else:
            delta = rng.choice((-1, 1))
        specs.append(perturb(spec, channel, i, j, delta))

    return specs


def write_fixtures(specs: Iterable[FixtureSpec], directory: str | None = None) -> list[str]:
    """
    Writes a file ``<name>.jpg`` for every spec in *specs* into *directory* (the configured fixture
    directory by default) together with a YAML manifest that lists each file with its spec and the
    exit status its identification with all present tables yields. Returns the paths of the written
    files.
    """
    if directory is None:
        directory = settings.fixture_directory

    # build all contents before touching the directory
    specs = list(specs)
    contents = [write_minimal_jpeg(spec) for spec in specs]
    entries = [
        {
            "file": f"{spec.name}.jpg",
            "status": spec.expected_status(),
            "spec": spec.model_dump(mode="json"),
        }
        for spec in specs
    ]

    os.makedirs(directory, exist_ok=True)
    paths = []
    for entry, data in zip(entries, contents):
        path = os.path.join(directory, entry["file"])
        with open(path, "wb") as f:
            f.write(data)
        paths.append(path)

    with open(os.path.join(directory, MANIFEST_NAME), "w") as f:
        yaml.safe_dump({"fixtures": entries}, f, sort_keys=False)

    logger.debug(f"wrote {len(paths)} fixture(s) to {directory}")

    return paths


def load_manifest(directory: str | None = None) -> list[tuple[str, FixtureSpec, int]]:
    """
    Reads the manifest in *directory* (the configured fixture directory by default) and returns
    ``(path, spec, status)`` triples of all fixtures it lists.
    """
    if directory is None:
        directory = settings.fixture_directory

    path = os.path.join(directory, MANIFEST_NAME)
    if not os.path.exists(path):
        raise FileNotFoundError(f"fixture manifest {path} does not exist")

    with open(path, "r") as f:
        content = yaml.load(f, Loader=yaml.SafeLoader) or {}

    return [
        (
            os.path.join(directory, entry["file"]),
            FixtureSpec.model_validate(entry["spec"]),
            int(entry["status"]),
        )
        for entry in content.get("fixtures", [])
    ]
