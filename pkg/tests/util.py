# coding: utf-8

"""
Helpers for tests. The oracle functions below only use integer arithmetic and do not rely on any
jpegqf code, so that library results can be cross-checked against them.
"""


__all__ = [
    "skip_if", "LUMINANCE_TABLE", "CHROMINANCE_TABLE", "oracle_scale", "oracle_step",
    "oracle_matrix", "oracle_compatible", "oracle_candidates", "noisy_table", "band_table",
]


import functools


def skip_if(b):
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            return func(*args, **kwargs) if not b else None
        return wrapper
    return decorator


# default tables as printed by the IJG, row by row
LUMINANCE_TABLE = [
    16, 11, 10, 16, 24, 40, 51, 61,
    12, 12, 14, 19, 26, 58, 60, 55,
    14, 13, 16, 24, 40, 57, 69, 56,
    14, 17, 22, 29, 51, 87, 80, 62,
    18, 22, 37, 56, 68, 109, 103, 77,
    24, 35, 55, 64, 81, 104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101,
    72, 92, 95, 98, 112, 100, 103, 99,
]

CHROMINANCE_TABLE = [
    17, 18, 24, 47, 99, 99, 99, 99,
    18, 21, 26, 66, 99, 99, 99, 99,
    24, 26, 56, 99, 99, 99, 99, 99,
    47, 66, 99, 99, 99, 99, 99, 99,
] + [99] * 32


def oracle_scale(f):
    if f < 50:
        return 5000 // f
    return 200 - 2 * f


def oracle_step(d, s):
    q = (d * s + 50) // 100
    return 1 if q < 1 else (255 if q > 255 else q)


def oracle_matrix(f, base):
    s = oracle_scale(f)
    return [oracle_step(d, s) for d in base]


def oracle_compatible(s, steps, base):
    """
    Whether the scale value *s* satisfies ``100 q - 150 <= d s < 100 q + 50`` for all pairs of
    observed steps and default steps, multiplied out. Saturated steps of 255 have no upper limit.
    """
    for q, d in zip(steps, base):
        if d * s < 100 * q - 150:
            return False
        if q != 255 and d * s >= 100 * q + 50:
            return False
    return True


def oracle_candidates(luminance=None, chrominance=None):
    """
    Brute-force candidates in decreasing order for flat 64-value tables, *None* skips a channel.
    """
    result = []
    for f in range(100, 0, -1):
        s = oracle_scale(f)
        if luminance is not None and not oracle_compatible(s, luminance, LUMINANCE_TABLE):
            continue
        if chrominance is not None and not oracle_compatible(s, chrominance, CHROMINANCE_TABLE):
            continue
        result.append(f)
    return result


def noisy_table(rng, f, base, max_changes=3, max_delta=2):
    """
    Standard table of quality factor *f* for the flat *base* table with up to *max_changes* random
    steps moved by 1 to *max_delta* in either direction, kept within [1, 255].
    """
    steps = oracle_matrix(f, base)
    for _ in range(rng.randint(0, max_changes)):
        k = rng.randrange(64)
        delta = rng.choice([-1, 1]) * rng.randint(1, max_delta)
        steps[k] = min(max(steps[k] + delta, 1), 255)
    return steps


def band_table(rng, s, base):
    """
    Random table whose every step is drawn from the steps compatible with the scale value *s*, so
    that *s* survives the narrowing of the table.
    """
    steps = []
    for d in base:
        # 100 q - 150 <= d s < 100 q + 50
        lo = (d * s - 50) // 100 + 1
        hi = (d * s + 150) // 100
        steps.append(rng.randint(min(max(lo, 1), 255), min(hi, 255)))
    return steps
