"""The canonical table of the 77 triple-intersection numbers.

Entries appear in lexicographic order of the representative triples
(left to right, top to bottom of the published 26-row layout).  The
colour field carries the classical semantics: red entries are the three
concurrency-forced zeros, blue marks a Z2 point stabiliser, brown the
unique Z2 x Z2 one.
"""

from __future__ import annotations

from functools import lru_cache

from .labels import Triple, parse_triple

# (triple, intersection number, colour)
TABLE_ENTRIES: tuple[tuple[str, int, str], ...] = (
    ("(1, 23), (1, 24), (1, 25)", 22, "plain"),
    ("(1, 23), (1, 24), (1, 34)", 0, "red"),
    ("(1, 23), (1, 24), (1, 35)", 20, "plain"),
    ("(1, 23), (1, 24), (1, 56)", 12, "blue"),
    ("(1, 23), (1, 24), (2, 13)", 18, "blue"),
    ("(1, 23), (1, 24), (2, 15)", 8, "plain"),
    ("(1, 23), (1, 24), (2, 34)", 22, "blue"),
    ("(1, 23), (1, 24), (2, 35)", 28, "plain"),
    ("(1, 23), (1, 24), (2, 56)", 22, "blue"),
    ("(1, 23), (1, 24), (3, 12)", 28, "blue"),
    ("(1, 23), (1, 24), (3, 14)", 20, "blue"),
    ("(1, 23), (1, 24), (3, 15)", 12, "plain"),
    ("(1, 23), (1, 24), (3, 24)", 16, "blue"),
    ("(1, 23), (1, 24), (3, 25)", 30, "plain"),
    ("(1, 23), (1, 24), (3, 45)", 28, "plain"),
    ("(1, 23), (1, 24), (3, 56)", 16, "blue"),
    ("(1, 23), (1, 24), (5, 12)", 30, "plain"),
    ("(1, 23), (1, 24), (5, 13)", 28, "plain"),
    ("(1, 23), (1, 24), (5, 16)", 14, "plain"),
    ("(1, 23), (1, 24), (5, 23)", 14, "plain"),
    ("(1, 23), (1, 24), (5, 26)", 22, "plain"),
    ("(1, 23), (1, 24), (5, 34)", 18, "plain"),
    ("(1, 23), (1, 24), (5, 36)", 20, "plain"),
    ("(1, 23), (1, 45), (2, 13)", 16, "blue"),
    ("(1, 23), (1, 45), (2, 14)", 12, "plain"),
    ("(1, 23), (1, 45), (2, 16)", 12, "blue"),
    ("(1, 23), (1, 45), (2, 34)", 20, "plain"),
    ("(1, 23), (1, 45), (2, 36)", 12, "blue"),
    ("(1, 23), (1, 45), (2, 45)", 8, "blue"),
    ("(1, 23), (1, 45), (2, 46)", 18, "plain"),
    ("(1, 23), (1, 45), (6, 12)", 16, "blue"),
    ("(1, 23), (1, 45), (6, 23)", 8, "brown"),
    ("(1, 23), (1, 45), (6, 24)", 20, "plain"),
    ("(1, 23), (2, 13), (3, 12)", 0, "red"),
    ("(1, 23), (2, 13), (3, 14)", 18, "blue"),
    ("(1, 23), (2, 13), (3, 45)", 16, "blue"),
    ("(1, 23), (2, 13), (4, 12)", 20, "blue"),
    ("(1, 23), (2, 13), (4, 13)", 14, "blue"),
    ("(1, 23), (2, 13), (4, 15)", 26, "plain"),
    ("(1, 23), (2, 13), (4, 35)", 28, "plain"),
    ("(1, 23), (2, 13), (4, 56)", 8, "blue"),
    ("(1, 23), (2, 14), (3, 14)", 0, "red"),
    ("(1, 23), (2, 14), (3, 15)", 8, "plain"),
    ("(1, 23), (2, 14), (3, 24)", 20, "blue"),
    ("(1, 23), (2, 14), (3, 25)", 14, "plain"),
    ("(1, 23), (2, 14), (3, 45)", 12, "plain"),
    ("(1, 23), (2, 14), (3, 56)", 12, "blue"),
    ("(1, 23), (2, 14), (5, 12)", 20, "plain"),
    ("(1, 23), (2, 14), (5, 13)", 20, "plain"),
    ("(1, 23), (2, 14), (5, 14)", 4, "plain"),
    ("(1, 23), (2, 14), (5, 16)", 16, "plain"),
    ("(1, 23), (2, 14), (5, 34)", 20, "plain"),
    ("(1, 23), (2, 14), (5, 36)", 12, "plain"),
    ("(1, 23), (2, 34), (3, 45)", 28, "plain"),
    ("(1, 23), (2, 34), (3, 56)", 20, "blue"),
    ("(1, 23), (2, 34), (4, 13)", 30, "blue"),
    ("(1, 23), (2, 34), (4, 15)", 22, "plain"),
    ("(1, 23), (2, 34), (4, 35)", 30, "plain"),
    ("(1, 23), (2, 34), (4, 56)", 16, "blue"),
    ("(1, 23), (2, 34), (5, 14)", 28, "plain"),
    ("(1, 23), (2, 34), (5, 16)", 14, "plain"),
    ("(1, 23), (2, 34), (5, 23)", 12, "plain"),
    ("(1, 23), (2, 34), (5, 24)", 24, "plain"),
    ("(1, 23), (2, 34), (5, 26)", 28, "plain"),
    ("(1, 23), (2, 34), (5, 34)", 16, "plain"),
    ("(1, 23), (2, 34), (5, 36)", 30, "plain"),
    ("(1, 23), (2, 34), (5, 46)", 20, "plain"),
    ("(1, 23), (2, 45), (3, 45)", 6, "blue"),
    ("(1, 23), (2, 45), (3, 46)", 12, "plain"),
    ("(1, 23), (2, 45), (4, 16)", 24, "plain"),
    ("(1, 23), (2, 45), (4, 36)", 24, "plain"),
    ("(1, 23), (2, 45), (6, 23)", 8, "blue"),
    ("(1, 23), (2, 45), (6, 34)", 28, "plain"),
    ("(1, 23), (2, 45), (6, 45)", 8, "blue"),
    ("(1, 23), (4, 23), (5, 23)", 2, "blue"),
    ("(1, 23), (4, 23), (5, 26)", 14, "plain"),
    ("(1, 23), (4, 25), (6, 35)", 24, "plain"),
)

assert len(TABLE_ENTRIES) == 77


@lru_cache(maxsize=1)
def table_triples() -> tuple[Triple, ...]:
    return tuple(parse_triple(text) for text, _, _ in TABLE_ENTRIES)


@lru_cache(maxsize=1)
def _by_triple() -> dict[Triple, tuple[int, str]]:
    out = {}
    for (text, value, colour), trip in zip(TABLE_ENTRIES, table_triples()):
        out[trip] = (value, colour)
    return out


def known_value(triple: Triple) -> int:
    """The published intersection number for a representative triple."""
    return _by_triple()[tuple(sorted(triple))][0]


def known_colour(triple: Triple) -> str:
    return _by_triple()[tuple(sorted(triple))][1]


def blue_triples() -> tuple[Triple, ...]:
    return tuple(t for (_, _, c), t in zip(TABLE_ENTRIES, table_triples())
                 if c == "blue")


def red_triples() -> tuple[Triple, ...]:
    return tuple(t for (_, _, c), t in zip(TABLE_ENTRIES, table_triples())
                 if c == "red")


def brown_triple() -> Triple:
    (t,) = tuple(t for (_, _, c), t in zip(TABLE_ENTRIES, table_triples())
                 if c == "brown")
    return t
