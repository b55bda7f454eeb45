"""Marked bumpless pipedream grids.

An n x n grid of the seven tile kinds, where every row has a pipe entering
from the right, every column has a pipe leaving south, no pipe enters from
the top and none leaves to the left.  Pipes travel only left and down, so
local edge matching plus the four boundary conditions already force global
consistency (no loops are possible with this tile set).

Cells are addressed matrix-style and 1-based: ``(row, col)`` with row 1 at
the top.

Text format: one character per tile, ``.-|+rjx`` for blank, horizontal,
vertical, plus, R, J, marked J; rows joined by ``"\\n"`` or ``"/"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .perms import Permutation

__all__ = [
    "Tile",
    "Mbpd",
    "ValidationError",
    "EdgeMismatch",
    "BoundaryViolation",
    "ParseError",
    "NotAlternating",
    "validate",
    "rothe",
    "identity_mbpd",
    "weight",
    "enumerate_mbpd",
    "asm_of",
    "parse",
    "serialize",
    "render_ascii",
    "to_json_dict",
    "from_json_dict",
]


class Tile(Enum):
    """The seven tile kinds, in enumeration (ordinal) order."""

    BLANK = "."
    HORIZ = "-"
    VERT = "|"
    PLUS = "+"
    R = "r"
    J = "j"
    MARKED_J = "x"

    @property
    def char(self) -> str:
        return self.value

    @property
    def connects(self) -> frozenset[str]:
        """Connection directions, a subset of {'L','R','U','D'}."""
        return _CONNECTS[self]

    @property
    def heavy(self) -> bool:
        """Blank and marked-J tiles are heavy; they carry the row weight."""
        return self in (Tile.BLANK, Tile.MARKED_J)

    @property
    def light(self) -> bool:
        return not self.heavy


_CONNECTS = {
    Tile.BLANK: frozenset(),
    Tile.HORIZ: frozenset("LR"),
    Tile.VERT: frozenset("UD"),
    Tile.PLUS: frozenset("LRUD"),
    Tile.R: frozenset("RD"),
    Tile.J: frozenset("LU"),
    Tile.MARKED_J: frozenset("LU"),
}

_CHAR_TO_TILE = {t.value: t for t in Tile}


class ValidationError(ValueError):
    """Base class for grid validation failures."""


class EdgeMismatch(ValidationError):
    def __init__(self, i: int, j: int, direction: str):
        self.cell = (i, j)
        self.direction = direction
        super().__init__(f"edge mismatch at ({i},{j}) towards {direction}")


class BoundaryViolation(ValidationError):
    def __init__(self, side: str, index: int):
        self.side = side
        self.index = index
        super().__init__(f"boundary violation on {side} side at index {index}")


class ParseError(ValueError):
    """Raised on unknown tile characters or ragged rows."""


class NotAlternating(ValueError):
    """The R/J sign matrix of a grid failed the ASM axioms (internal bug)."""


@dataclass(frozen=True)
class Mbpd:
    """An immutable, validated marked bumpless pipedream.

    Construct via :func:`validate`, :func:`parse` or :func:`rothe`; the raw
    constructor does not re-check the invariants.
    """

    n: int
    tiles: tuple[tuple[Tile, ...], ...]

    def tile(self, i: int, j: int) -> Tile:
        """Tile at 1-based (row, col)."""
        return self.tiles[i - 1][j - 1]

    def row(self, i: int) -> tuple[Tile, ...]:
        return self.tiles[i - 1]

    def with_tiles(self, changes: dict[tuple[int, int], Tile]) -> "Mbpd":
        """A copy with the given 1-based cells replaced (no revalidation)."""
        rows = [list(r) for r in self.tiles]
        for (i, j), t in changes.items():
            rows[i - 1][j - 1] = t
        return Mbpd(self.n, tuple(tuple(r) for r in rows))

    def heavy_cells(self) -> list[tuple[int, int]]:
        """All 1-based cells holding a heavy tile, in row-major order."""
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.tile(i, j).heavy
        ]

    def heavy_count(self) -> int:
        return len(self.heavy_cells())

    def is_marked(self) -> bool:
        """True if any marked-J tile is present."""
        return any(t is Tile.MARKED_J for row in self.tiles for t in row)

    def __str__(self) -> str:
        return serialize(self, sep="/")

    def __repr__(self) -> str:
        return f"Mbpd({serialize(self, sep='/')!r})"


def validate(raw: list[list[Tile]] | tuple[tuple[Tile, ...], ...]) -> Mbpd:
    """Check edge matching and boundary conditions; return the grid.

    Raises :class:`EdgeMismatch` naming the first offending cell/edge, or
    :class:`BoundaryViolation` naming the side and row/column index.
    """
    n = len(raw)
    if n < 1:
        raise ValidationError("grid must have n >= 1")
    tiles = tuple(tuple(row) for row in raw)
    if any(len(row) != n for row in tiles):
        raise ValidationError("grid must be square")

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = tiles[i - 1][j - 1].connects
            # boundary
            if i == 1 and "U" in c:
                raise BoundaryViolation("top", j)
            if j == 1 and "L" in c:
                raise BoundaryViolation("left", i)
            if j == n and "R" not in c:
                raise BoundaryViolation("right", i)
            if i == n and "D" not in c:
                raise BoundaryViolation("bottom", j)
            # interior edges (each checked once, towards the right and down)
            if j < n and (("R" in c) != ("L" in tiles[i - 1][j].connects)):
                raise EdgeMismatch(i, j, "R")
            if i < n and (("D" in c) != ("U" in tiles[i][j - 1].connects)):
                raise EdgeMismatch(i, j, "D")
    return Mbpd(n, tiles)


def rothe(w: Permutation) -> Mbpd:
    """The Rothe grid of ``w``: pipe i turns only at (i, w(i)).

    Cell (i,j) is R when j = w(i); on the horizontal ray (j > w(i)) it is
    Plus where pipe ``w^-1(j)``'s vertical ray passes and Horiz otherwise;
    on the left (j < w(i)) it is Vert under an earlier pipe's turn and
    Blank otherwise.  Blanks are exactly the inversions of ``w``.
    """
    n = w.n
    winv = w.inverse()
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == w(i):
                row.append(Tile.R)
            elif j > w(i):
                row.append(Tile.PLUS if winv(j) < i else Tile.HORIZ)
            else:
                row.append(Tile.VERT if winv(j) < i else Tile.BLANK)
        rows.append(tuple(row))
    return Mbpd(n, tuple(rows))


def identity_mbpd(n: int) -> Mbpd:
    """The unique grid with no heavy tile: R on the diagonal."""
    return rothe(Permutation.identity(n))


def weight(d: Mbpd) -> tuple[int, ...]:
    """Heavy tiles per row."""
    return tuple(sum(1 for t in row if t.heavy) for row in d.tiles)


# Tiles compatible with a required (left, up) connection pair.  Only the
# (False, False) and (True, True) slots branch; this is the whole search
# tree of the enumeration.
_BY_LEFT_UP: dict[tuple[bool, bool], tuple[Tile, ...]] = {}
for _t in Tile:
    _key = ("L" in _t.connects, "U" in _t.connects)
    _BY_LEFT_UP[_key] = _BY_LEFT_UP.get(_key, ()) + (_t,)


def enumerate_mbpd(n: int) -> Iterator[Mbpd]:
    """Yield every valid grid exactly once.

    Row-major backtracking: at each cell the left and up connections are
    forced by the previous cells, so the only choices are blank-vs-R and
    plus-vs-J-vs-marked-J, tried in tile ordinal order.  The output order
    is therefore row-major lexicographic by tile ordinal.
    """
    if n < 1:
        return
    cells: list[Tile] = []

    def fill(k: int) -> Iterator[Mbpd]:
        if k == n * n:
            rows = tuple(tuple(cells[r * n : (r + 1) * n]) for r in range(n))
            yield Mbpd(n, rows)
            return
        i, j = divmod(k, n)  # 0-based here
        need_left = j > 0 and "R" in cells[k - 1].connects
        need_up = i > 0 and "D" in cells[k - n].connects
        for t in _BY_LEFT_UP[(need_left, need_up)]:
            if j == n - 1 and "R" not in t.connects:
                continue
            if i == n - 1 and "D" not in t.connects:
                continue
            cells.append(t)
            yield from fill(k + 1)
            cells.pop()

    yield from fill(0)


def asm_of(d: Mbpd) -> list[list[int]]:
    """The sign matrix: +1 at R tiles, -1 at J/marked-J, 0 elsewhere.

    The result is checked against the ASM axioms (rows and columns sum to
    1 with signs alternating, first and last nonzero entry +1); a failure
    raises :class:`NotAlternating` and would indicate a bug, since every
    valid grid corresponds to an ASM.
    """
    m = [
        [
            1 if t is Tile.R else -1 if t in (Tile.J, Tile.MARKED_J) else 0
            for t in row
        ]
        for row in d.tiles
    ]
    lines = [r for r in m] + [[m[i][j] for i in range(d.n)] for j in range(d.n)]
    for line in lines:
        nonzero = [v for v in line if v]
        if sum(nonzero) != 1:
            raise NotAlternating(f"line sums to {sum(nonzero)}, not 1")
        if any(a == b for a, b in zip(nonzero, nonzero[1:])):
            raise NotAlternating("signs do not alternate")
        if nonzero and (nonzero[0] != 1 or nonzero[-1] != 1):
            raise NotAlternating("line does not start and end with +1")
    return m


def parse(text: str) -> Mbpd:
    """Parse the character grid format; rows split on newlines or ``/``."""
    text = text.strip()
    rows = text.replace("/", "\n").split("\n")
    rows = [r.strip() for r in rows if r.strip()]
    if not rows:
        raise ParseError("empty grid")
    width = len(rows[0])
    tiles = []
    for r in rows:
        if len(r) != width:
            raise ParseError(f"ragged rows: expected width {width}, got {len(r)}")
        row = []
        for ch in r:
            if ch not in _CHAR_TO_TILE:
                raise ParseError(f"unknown tile character {ch!r}")
            row.append(_CHAR_TO_TILE[ch])
        tiles.append(row)
    if len(tiles) != width:
        raise ParseError(f"grid is {len(tiles)}x{width}, not square")
    return validate(tiles)


def serialize(d: Mbpd, sep: str = "\n") -> str:
    return sep.join("".join(t.char for t in row) for row in d.tiles)


def render_ascii(d: Mbpd) -> str:
    """Character-per-tile rendering; identical to :func:`serialize`."""
    return serialize(d)


def to_json_dict(d: Mbpd) -> dict:
    return {"n": d.n, "rows": ["".join(t.char for t in row) for row in d.tiles]}


def from_json_dict(obj: dict) -> Mbpd:
    rows = obj["rows"]
    d = parse("\n".join(rows))
    if d.n != obj["n"]:
        raise ParseError(f"n={obj['n']} does not match {d.n} rows")
    return d
