# coding: utf-8

"""
Command-line interface. The tool is invoked as

.. code-block:: text

    jpegqf PATH [CHANNEL] [VERBOSITY] [--json] [--batch PATH ...]

and reports the identified quality factor through its exit status: the quality factor itself
(1 to 100) for standard tables, 101 when no quality factor is compatible, 102 when a candidate
exists but not all steps match, and 200 when the file cannot be read or parsed.

*CHANNEL* selects the tables in bits, 1 for luminance only, 2 for chrominance only and 3 for both
(default). Note that some descriptions of the original tool label 1 as chrominance, the bit
encoding used here takes precedence. *VERBOSITY* is 0 (silent), 1 (one line, default) or 2
(tables, interval, candidates and the step check).
"""

from __future__ import annotations


__all__ = [
    "CliRequest", "FileReport", "ArgumentParser", "run", "run_batch", "batch_status",
    "format_report", "create_parser", "main",
]


import sys
import argparse
from concurrent.futures import ThreadPoolExecutor

from jpegqf.types import (
    Annotated, List, Optional, Sequence, StrictInt, StrictStr, StrictBool, Ge, Le,
    NonEmptyStrictStr, NoReturn,
)
from jpegqf.util import maybe_colored, format_fraction
from jpegqf.models.base import BaseModel
from jpegqf.models.matrix import ChannelMask, MissingTableError
from jpegqf.models.outcome import (
    Diff, IdentificationOutcome, Exact, CandidateMismatch, STATUS_IO_ERROR,
)
from jpegqf.identify import identify
from jpegqf.jpeg import DqtTable, JpegError, extract_dqt_tables, pair_tables, read_source
from jpegqf.logger import get_logger
import jpegqf.settings as settings


logger = get_logger(__name__)


class CliRequest(BaseModel):
    """
    A single identification request of the command line.
    """

    path: NonEmptyStrictStr
    channel_arg: Annotated[StrictInt, Ge(1), Le(3)] = 3
    verbosity: Annotated[StrictInt, Ge(0), Le(2)] = 1
    json_output: StrictBool = False

    @property
    def mask(self) -> ChannelMask:
        return ChannelMask.from_bits(self.channel_arg)


class FileReport(BaseModel):
    """
    Machine-readable result of one file, rendered as a single JSON line.
    """

    path: StrictStr
    status: StrictInt
    kind: StrictStr
    channels: StrictStr
    quality: Optional[StrictInt] = None
    candidates: List[StrictInt] = []
    interval: Optional[List[Optional[StrictStr]]] = None
    diffs: List[Diff] = []
    error: Optional[StrictStr] = None

    @classmethod
    def from_outcome(cls, path: str, outcome: IdentificationOutcome) -> FileReport:
        iv = outcome.interval
        return cls(
            path=path,
            status=outcome.status,
            kind=outcome.kind,
            channels=str(outcome.mask),
            quality=getattr(outcome, "quality", None),
            candidates=list(outcome.candidates),
            interval=[str(iv.lo), None if iv.hi is None else str(iv.hi)],
            diffs=list(getattr(outcome, "diffs", [])),
        )

    @classmethod
    def from_error(cls, path: str, mask: ChannelMask, error: Exception) -> FileReport:
        return cls(
            path=path,
            status=STATUS_IO_ERROR,
            kind="error",
            channels=str(mask),
            error=str(error),
        )


def _summary(outcome: IdentificationOutcome) -> str:
    if isinstance(outcome, Exact):
        return f"quality factor {outcome.quality} ({outcome.mask})"
    if isinstance(outcome, CandidateMismatch):
        return (
            f"candidate quality factor {outcome.quality} found, but {len(outcome.diffs)} "
            f"step(s) do not match ({outcome.mask})"
        )
    return f"no matching standard quality factor ({outcome.mask})"


def format_report(
    outcome: IdentificationOutcome,
    verbosity: int,
    dqt_tables: Sequence[DqtTable] | None = None,
    source: str | None = None,
) -> str:
    """
    Renders *outcome* as text for the given *verbosity*: nothing for 0, a single line for 1 and a
    multi-line report for 2. The verbose report also lists all *dqt_tables* read from the file,
    with differing steps highlighted, when given. *source* prefixes the single-line summary.
    """
    if verbosity not in (0, 1, 2):
        raise ValueError(f"verbosity must be 0, 1 or 2, but got {verbosity!r}")

    if verbosity == 0:
        return ""

    summary = _summary(outcome)
    if source is not None:
        summary = f"{source}: {summary}"
    if verbosity == 1:
        return summary

    diffs = list(getattr(outcome, "diffs", []))
    lines = []

    # tables
    for table in dqt_tables or []:
        channel = table.channel
        label = f"{channel} (id {table.table_id})" if channel else f"id {table.table_id}"
        used = channel is not None and channel in outcome.mask.channels
        if not used:
            label += ", not used"
        lines.append(maybe_colored(f"{table.precision!s} quantization table {label}:", "cyan"))
        highlight = {(d.i, d.j) for d in diffs if d.channel is channel} if used else None
        lines.append(table.matrix.format(indent="  ", highlight=highlight))

    # interval and candidates
    iv = outcome.interval
    lines.append(f"channels   : {outcome.mask}")
    lines.append(f"scale lower: {format_fraction(iv.lo)}")
    lines.append(f"scale upper: {format_fraction(iv.hi, unbounded='+inf')}")
    if iv.is_empty:
        lines.append("interval   : empty")
    found = ", ".join(map(str, outcome.candidates)) or "none"
    lines.append(f"candidates : {found}")

    # step check
    n_steps = 64 * len(outcome.mask.channels)
    if isinstance(outcome, Exact):
        lines.append(maybe_colored(
            f"step check : all {n_steps} steps match quality factor {outcome.quality}",
            "green",
        ))
    elif isinstance(outcome, CandidateMismatch):
        lines.append(maybe_colored(
            f"step check : {len(diffs)} of {n_steps} steps differ from quality factor "
            f"{outcome.quality}",
            "red",
        ))
        lines.extend(f"  {d}" for d in diffs)
    else:
        lines.append("step check : skipped, no candidate")

    lines.append(summary)

    return "\n".join(lines)


def run(request: CliRequest) -> tuple[int, str]:
    """
    Processes a single *request* and returns the exit status and the text to print, which is
    empty for verbosity 0. Read and parse errors result in status 200.
    """
    mask = request.mask
    try:
        data = read_source(request.path)
        dqt_tables = extract_dqt_tables(data)
        outcome = identify(pair_tables(dqt_tables), mask)
    except (OSError, JpegError, MissingTableError) as e:
        logger.debug(f"failed to process {request.path}: {e}")
        if request.verbosity == 0:
            return STATUS_IO_ERROR, ""
        if request.json_output:
            return STATUS_IO_ERROR, FileReport.from_error(request.path, mask, e).model_dump_json()
        return STATUS_IO_ERROR, f"{request.path}: error: {e}"

    if request.verbosity == 0:
        text = ""
    elif request.json_output:
        text = FileReport.from_outcome(request.path, outcome).model_dump_json()
    else:
        text = format_report(outcome, request.verbosity, dqt_tables=dqt_tables, source=request.path)

    return outcome.status, text


def run_batch(requests: Sequence[CliRequest], workers: int | None = None) -> list[tuple[int, str]]:
    """
    Processes all *requests* concurrently with *workers* threads (the configured number by
    default) and returns their results in the order of *requests*.
    """
    if workers is None:
        workers = settings.workers

    if len(requests) <= 1 or workers == 1:
        return [run(request) for request in requests]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, requests))


def batch_status(statuses: Sequence[int]) -> int:
    """
    Combines per-file *statuses*: the first status that is not a quality factor, or the status of
    the first file when all files were identified.
    """
    if not statuses:
        raise ValueError("cannot combine an empty sequence of statuses")

    for status in statuses:
        if not (1 <= status <= 100):
            return status
    return statuses[0]


class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that exits with status 200 on usage errors.
    """

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(STATUS_IO_ERROR, f"{self.prog}: error: {message}\n")


def create_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="jpegqf",
        description="Identifies the IJG standard quality factor of the quantization tables of a "
        "JPEG file and reports it as the exit status.",
    )
    parser.add_argument("path", help="JPEG file to check, '-' reads from standard input")
    parser.add_argument(
        "channel",
        nargs="?",
        type=int,
        default=3,
        choices=(1, 2, 3),
        help="tables to use in bits, 1: luminance, 2: chrominance, 3: both; default: 3",
    )
    parser.add_argument(
        "verbosity",
        nargs="?",
        type=int,
        default=1,
        choices=(0, 1, 2),
        help="0: exit status only, 1: single line, 2: verbose; default: 1",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="print one JSON object per file instead of text",
    )
    parser.add_argument(
        "--batch",
        nargs="+",
        default=[],
        metavar="PATH",
        help="additional files, processed concurrently and reported in the given order",
    )

    return parser


def main(argv: Sequence[str] | None = None) -> None:
    parser = create_parser()
    args = parser.parse_args(argv)

    paths = [args.path] + list(args.batch)
    if paths.count("-") > 1:
        parser.error("standard input can only be read once")
    try:
        requests = [
            CliRequest(
                path=path,
                channel_arg=args.channel,
                verbosity=args.verbosity,
                json_output=args.json,
            )
            for path in paths
        ]
    except ValueError as e:
        parser.error(str(e))

    results = run_batch(requests)
    for _, text in results:
        if text:
            print(text)

    sys.exit(batch_status([status for status, _ in results]))


if __name__ == "__main__":
    main()
