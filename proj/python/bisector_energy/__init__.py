"""Exact perpendicular-bisector statistics of planar point sets.

Points are pairs of ``int`` or ``fractions.Fraction``; results that are
rational come back as ``Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import _core
from ._core import BisectError

__all__ = [
    "BisectError",
    "audit",
    "bisector",
    "bisector_energy",
    "dist2",
    "distinct_bisectors",
    "ensure_generic",
    "format_pointset",
    "gen_ellipse_train",
    "gen_grid",
    "gen_line",
    "gen_random",
    "gen_rational_circle",
    "max_cocircular",
    "max_collinear",
    "parse_pointset",
    "stats",
]

Point = tuple[Fraction, Fraction]


def _encode(value) -> str:
    if isinstance(value, bool):
        raise TypeError("coordinates must be int or Fraction")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, str):
        return value
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


def _encode_point(p) -> tuple[str, str]:
    x, y = p
    return _encode(x), _encode(y)


def _encode_set(points: Iterable) -> list[tuple[str, str]]:
    return [_encode_point(p) for p in points]


def _decode_set(raw) -> list[Point]:
    return [(Fraction(x), Fraction(y)) for x, y in raw]


def stats(points: Iterable, cocircular: bool = True) -> dict:
    """StatsReport as a dict; ``max_cocircular`` is None when skipped."""
    report = json.loads(_core.stats_json(_encode_set(points), cocircular))
    report["rich_lines"] = {int(k): v for k, v in report["rich_lines"].items()}
    return report


def audit(points: Iterable, which: Sequence[str] = ()) -> dict:
    return json.loads(_core.audit_json(_encode_set(points), list(which)))


def bisector(a, b) -> tuple[int, int, int]:
    """Canonical (A, B, C) of the line A x + B y = C."""
    return tuple(int(v) for v in _core.bisector(_encode_point(a), _encode_point(b)))


def dist2(a, b) -> Fraction:
    return Fraction(_core.dist2(_encode_point(a), _encode_point(b)))


def bisector_energy(points: Iterable) -> int:
    return _core.bisector_energy(_encode_set(points))


def distinct_bisectors(points: Iterable) -> int:
    return _core.distinct_bisectors(_encode_set(points))


def max_collinear(points: Iterable) -> int:
    return _core.max_collinear(_encode_set(points))


def max_cocircular(points: Iterable) -> int:
    return _core.max_cocircular(_encode_set(points))


def gen_grid(k: int) -> list[Point]:
    return _decode_set(_core.gen_grid(k))


def gen_line(n: int) -> list[Point]:
    return _decode_set(_core.gen_line(n))


def gen_rational_circle(n: int) -> list[Point]:
    return _decode_set(_core.gen_rational_circle(n))


def gen_ellipse_train(n: int, m: int) -> list[Point]:
    return _decode_set(_core.gen_ellipse_train(n, m))


def gen_random(n: int, range_: int, seed: int) -> list[Point]:
    return _decode_set(_core.gen_random(n, range_, seed))


def ensure_generic(points: Iterable) -> tuple[list[Point], int]:
    raw, rotations = _core.ensure_generic(_encode_set(points))
    return _decode_set(raw), rotations


def parse_pointset(text: str) -> list[Point]:
    return _decode_set(_core.parse_pointset_text(text))


def format_pointset(points: Iterable) -> str:
    return _core.format_pointset(_encode_set(points))
