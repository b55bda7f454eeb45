"""Classical (not-necessarily-reduced) pipedreams on the staircase.

Cells ``(i, j)`` with ``i + j <= n + 1``; the antidiagonal ``i + j = n + 1``
is fixed elbow tiles, and every other cell is a crossing or a bump.  Only
the crossing set carries information, so that is all we store.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .perms import Permutation, hecke_product

__all__ = [
    "PipeDream",
    "enumerate_pd",
    "pd_weight",
    "reading_word",
    "pd_permutation",
    "render_pd",
    "parse_pd",
    "format_pd",
]


@dataclass(frozen=True)
class PipeDream:
    n: int
    crossings: frozenset[tuple[int, int]]

    def __post_init__(self):
        for (i, j) in self.crossings:
            if not (i >= 1 and j >= 1 and i + j <= self.n):
                raise ValueError(
                    f"crossing ({i},{j}) outside the free staircase cells"
                )

    def __str__(self) -> str:
        return format_pd(self)


def free_cells(n: int) -> list[tuple[int, int]]:
    """The non-antidiagonal staircase cells, row-major."""
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


def enumerate_pd(n: int) -> Iterator[PipeDream]:
    """All crossing subsets, by size then lexicographically by cell list."""
    cells = free_cells(n)
    for k in range(len(cells) + 1):
        for chosen in combinations(cells, k):
            yield PipeDream(n, frozenset(chosen))


def pd_weight(p: PipeDream) -> tuple[int, ...]:
    """Crossings per row."""
    m = [0] * p.n
    for (i, _) in p.crossings:
        m[i - 1] += 1
    return tuple(m)


def reading_word(p: PipeDream) -> list[int]:
    """Rows top to bottom, right to left within a row; cell (i,j) reads i+j-1."""
    word = []
    for i in range(1, p.n + 1):
        for j in range(p.n, 0, -1):
            if (i, j) in p.crossings:
                word.append(i + j - 1)
    return word


def pd_permutation(p: PipeDream) -> Permutation:
    """Fold the reading word with the 0-Hecke product."""
    return hecke_product(reading_word(p), p.n)


def render_pd(p: PipeDream) -> str:
    """Staircase picture: '+' crossings, ')' bumps, 'j' on the antidiagonal."""
    lines = []
    for i in range(1, p.n + 1):
        row = []
        for j in range(1, p.n + 2 - i):
            if i + j == p.n + 1:
                row.append("j")
            elif (i, j) in p.crossings:
                row.append("+")
            else:
                row.append(")")
        lines.append("".join(row))
    return "\n".join(lines)


def format_pd(p: PipeDream) -> str:
    cells = ",".join(f"({i},{j})" for (i, j) in sorted(p.crossings))
    return f"n={p.n};" + (f" {cells}" if cells else "")


def parse_pd(text: str) -> PipeDream:
    m = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;(.*)", text, re.S)
    if not m:
        raise ValueError(f"cannot parse pipedream {text!r}")
    n = int(m.group(1))
    cells = frozenset(
        (int(a), int(b)) for a, b in re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", m.group(2))
    )
    return PipeDream(n, cells)
