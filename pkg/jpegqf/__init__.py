# coding: utf-8
# flake8: noqa

"""
Exact identification of IJG standard JPEG quality factors from quantization tables.
"""


__all__ = [
    "Settings",
    "BaseModel",
    "Channel", "QuantMatrix", "ChannelMask", "TablePair", "MissingTableError",
    "ScaleInterval",
    "Diff", "IdentificationOutcome", "Exact", "CandidateMismatch", "NoCandidate",
    "base_tables", "quality_scaling", "synthesize_matrix", "synthesize_pair",
    "step_interval", "narrow", "candidates", "verify", "identify", "identify_bytes",
    "identify_file",
    "JpegError", "NotAJpegError", "CorruptFileError", "MalformedDqtError", "NoTablesError",
    "scan_segments", "parse_dqt", "dezigzag", "extract_tables",
]


# package infos
from jpegqf.__meta__ import (
    __doc__, __author__, __email__, __copyright__, __credits__, __contact__, __license__,
    __status__, __version__,
)

# provisioning imports
from jpegqf.settings import Settings
from jpegqf.models.base import BaseModel
from jpegqf.models.matrix import Channel, QuantMatrix, ChannelMask, TablePair, MissingTableError
from jpegqf.models.interval import ScaleInterval
from jpegqf.models.outcome import (
    Diff, IdentificationOutcome, Exact, CandidateMismatch, NoCandidate,
)
from jpegqf.ijg import base_tables, quality_scaling, synthesize_matrix, synthesize_pair
from jpegqf.identify import (
    step_interval, narrow, candidates, verify, identify, identify_bytes, identify_file,
)
from jpegqf.jpeg import (
    JpegError, NotAJpegError, CorruptFileError, MalformedDqtError, NoTablesError, scan_segments,
    parse_dqt, dezigzag, extract_tables,
)
