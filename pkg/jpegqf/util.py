# coding: utf-8

"""
Helpful utilities.
"""

from __future__ import annotations


__all__ = [
    "colored", "maybe_colored", "uncolored", "format_fraction", "format_grid", "create_hash",
]


import os
import sys
import re
import hashlib

from jpegqf.types import Any, Fraction, Sequence
import jpegqf.settings as settings


# terminal codes for colors
colors = {
    "default": 39,
    "red": 31,
    "green": 32,
    "yellow": 33,
    "cyan": 36,
    "dark_gray": 90,
    "light_red": 91,
    "light_green": 92,
}

# terminal codes for styles
styles = {
    "default": 0,
    "bright": 1,
}


def colored(
    msg: Any,
    color: str | None = None,
    style: str | Sequence[str] | None = None,
    force: bool = False,
) -> str:
    """
    Returns the colored version of *msg* (converted to a string). *color* and *style* refer to the
    keys of the module-level *colors* and *styles* mappings, and *style* can also be a sequence of
    keys. Unless *force* is *True*, the string is returned unchanged when standard output is not a
    tty.
    """
    msg = str(msg)

    if not force:
        try:
            tty = os.isatty(sys.stdout.fileno())
        except Exception:
            tty = False
        if not tty:
            return msg

    color_code = colors.get(color or "default", colors["default"])

    if isinstance(style, str) or style is None:
        style = (style or "default",)
    style_code = ";".join(str(styles.get(s, styles["default"])) for s in style)

    return f"\033[{style_code};49;{color_code}m{msg}\033[0m"


def maybe_colored(msg: Any, *args, **kwargs) -> str:
    """
    Returns a colored representation of *msg* using :py:func:`colored` if the global settings allow
    coloring, and the unchanged *msg* otherwise.
    """
    return colored(msg, *args, **kwargs) if settings.colors else str(msg)


# compiled regular expression for removing all terminal style codes
uncolor_cre = re.compile(r"(\x1B\[[0-?]*[ -/]*[@-~])")


def uncolored(s: str) -> str:
    """
    Removes all terminal style codes from a string *s* and returns it.
    """
    return uncolor_cre.sub("", s)


def format_fraction(value: Fraction | int | None, unbounded: str = "inf") -> str:
    """
    Renders an exact rational *value* as ``"p/q (decimal)"``, or just ``"p"`` for integers. *None*
    stands for an unbounded value and is rendered as *unbounded*.
    """
    if value is None:
        return unbounded

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator} ({float(value):.3f})"


def format_grid(
    rows: Sequence[Sequence[int]],
    indent: str = "",
    highlight: set[tuple[int, int]] | None = None,
) -> str:
    """
    Formats an 8x8 grid *rows* as right-aligned columns, one line per row, prefixed by *indent*.
    Cells whose 1-based ``(i, j)`` position is contained in *highlight* are colored.
    """
    width = max(len(str(v)) for row in rows for v in row)
    lines = []
    for i, row in enumerate(rows, 1):
        cells = []
        for j, v in enumerate(row, 1):
            cell = str(v).rjust(width)
            if highlight and (i, j) in highlight:
                cell = maybe_colored(cell, color="light_red", style="bright")
            cells.append(cell)
        lines.append(indent + " ".join(cells))

    return "\n".join(lines)


def create_hash(inp: Any, l: int = 10, algo: str = "sha256") -> str:
    """
    Takes an arbitrary input *inp* and creates a hexadecimal string hash based on an algorithm
    *algo*. For valid algorithms, see python's hashlib. *l* corresponds to the maximum length of the
    returned hash.
    """
    return getattr(hashlib, algo)(str(inp).encode("utf-8")).hexdigest()[:l]
