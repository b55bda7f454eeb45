"""Row moves on marked bumpless pipedreams.

Pipe segments, light-sequence flavors, doublecross search, droop/undroop in
four flavors, and the two mutually-inverse families of elementary moves,
each classified by a left and a right trichotomy (nine cases per family).

Naming of cases in trace labels: the right case letter comes first, so a
target with right case D and left case C is labelled ``DC``.  The slashed
cases are written ``NC`` (no crossing) and ``NP`` (no plus).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .grid import Mbpd, Tile

__all__ = [
    "MoveError",
    "NoTarget",
    "DroopPreconditionViolated",
    "LightFlavor",
    "DroopKind",
    "FLeft",
    "FRight",
    "ELeft",
    "ERight",
    "FTarget",
    "ETarget",
    "is_pipe_segment",
    "classify_light_sequence",
    "find_doublecross",
    "droop",
    "undroop",
    "f_target_in_row",
    "find_f_target",
    "f_move",
    "find_e_target",
    "e_move",
    "F_TO_E_CASE",
]


class MoveError(ValueError):
    """Base class for move failures."""


class NoTarget(MoveError):
    def __init__(self, r: int, reason: str = ""):
        self.row = r
        msg = f"no target for row {r}"
        super().__init__(msg + (f": {reason}" if reason else ""))


class DroopPreconditionViolated(MoveError):
    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(f"droop precondition violated: {clause}")


class LightFlavor(Enum):
    PAIRED = "paired"
    TYPE_J = "J"
    TYPE_R = "R"
    TYPE_JR = "JR"
    NOT_LIGHT = "not-light"


class DroopKind(Enum):
    STANDARD = "standard"
    FUSE = "fuse"
    SPLIT = "split"
    SPLIT_FUSE = "split-fuse"


class FLeft(Enum):
    B = "B"
    C = "C"
    NOT_C = "NC"


class FRight(Enum):
    T = "T"
    D = "D"
    O = "O"


class ELeft(Enum):
    S = "S"
    D = "D"
    L = "L"


class ERight(Enum):
    I = "I"
    P = "P"
    NOT_P = "NP"


# Case correspondence between a move and the inverse-family target it
# leaves behind, window for window (right case, left case).
F_TO_E_CASE = {
    (FRight.T, FLeft.B): (ERight.I, ELeft.S),
    (FRight.T, FLeft.C): (ERight.I, ELeft.D),
    (FRight.T, FLeft.NOT_C): (ERight.I, ELeft.L),
    (FRight.D, FLeft.B): (ERight.P, ELeft.S),
    (FRight.D, FLeft.C): (ERight.P, ELeft.D),
    (FRight.D, FLeft.NOT_C): (ERight.P, ELeft.L),
    (FRight.O, FLeft.B): (ERight.NOT_P, ELeft.S),
    (FRight.O, FLeft.C): (ERight.NOT_P, ELeft.D),
    (FRight.O, FLeft.NOT_C): (ERight.NOT_P, ELeft.L),
}


@dataclass(frozen=True)
class FTarget:
    """A fully classified target for the downward move family.

    The heavy tile sits at ``(row, col)``; the window is rows
    ``[row, row+1]`` and columns ``[b, cprime]``.  ``lam``/``rho`` are the
    columns of the undroop rectangle (``lam == col`` always).
    """

    row: int
    col: int
    kind: str  # "f" | "fstar"
    left_case: FLeft
    right_case: FRight
    b: int
    cprime: int
    lam: int
    rho: int

    @property
    def window(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.row, self.row + 1), (self.b, self.cprime))

    @property
    def case_label(self) -> str:
        return self.right_case.value + self.left_case.value


@dataclass(frozen=True)
class ETarget:
    """A fully classified target for the upward move family.

    The move acts between rows ``row`` and ``row+1``; the target tile is
    ``(row+1, col)`` and the window is columns ``[cprime, col]``.
    """

    row: int
    col: int
    kind: str  # "e" | "estar"
    left_case: ELeft
    right_case: ERight
    cprime: int
    lam: int
    rho: int

    @property
    def window(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.row, self.row + 1), (self.cprime, self.col))

    @property
    def case_label(self) -> str:
        return self.right_case.value + self.left_case.value


def is_pipe_segment(d: Mbpd, r: int, b: int, c: int) -> bool:
    """Whether row r carries one pipe straight across columns [b, c].

    Interior tiles must be horizontal or plus.  Endpoints: the left one
    must connect right and the right one connect left; a single tile is a
    pipe segment exactly when it is non-blank.
    """
    if not (1 <= b <= c <= d.n):
        raise ValueError(f"bad pipe segment range [{b},{c}] for n={d.n}")
    if b == c:
        return d.tile(r, b) is not Tile.BLANK
    if "R" not in d.tile(r, b).connects or "L" not in d.tile(r, c).connects:
        return False
    return all(d.tile(r, j) in (Tile.HORIZ, Tile.PLUS) for j in range(b + 1, c))


def classify_light_sequence(d: Mbpd, r: int, b: int, c: int) -> LightFlavor:
    """Flavor of the R/J subsequence of the tiles at row r, columns [b, c].

    An empty range is paired.  Within a row the R's and J's of a light
    sequence alternate, so the flavor is determined by the two ends.
    """
    tiles = [d.tile(r, j) for j in range(b, c + 1)]
    if any(t.heavy for t in tiles):
        return LightFlavor.NOT_LIGHT
    rj = [t for t in tiles if t in (Tile.R, Tile.J)]
    if not rj:
        return LightFlavor.PAIRED
    if any(a is b2 for a, b2 in zip(rj, rj[1:])):
        raise MoveError("R/J subsequence does not alternate; invalid grid")
    starts_j = rj[0] is Tile.J
    ends_r = rj[-1] is Tile.R
    if starts_j and ends_r:
        return LightFlavor.TYPE_JR
    if starts_j:
        return LightFlavor.TYPE_J
    if ends_r:
        return LightFlavor.TYPE_R
    return LightFlavor.PAIRED


def find_doublecross(d: Mbpd, r: int, b: int) -> int | None:
    """Right column of the doublecross with top-left corner (r, b), if any.

    The candidate is the first J in row r+1 right of column b; both rows
    must then be pipe segments over the rectangle.
    """
    if r >= d.n or d.tile(r, b) is not Tile.R:
        return None
    dd = next(
        (j for j in range(b + 1, d.n + 1) if d.tile(r + 1, j) is Tile.J), None
    )
    if dd is None:
        return None
    if not (is_pipe_segment(d, r, b, dd) and is_pipe_segment(d, r + 1, b, dd)):
        return None
    assert d.tile(r + 1, b) is Tile.PLUS and d.tile(r, dd) is Tile.PLUS
    return dd


# Corner and interior tile rewrites for the droop.  The pipe segment of row
# r falls into row r+1; kinks of row r+1 rise into row r; vertical pipes
# pass through unchanged.
_DROOP_TOP_LEFT = {Tile.R: Tile.BLANK, Tile.PLUS: Tile.J}
_DROOP_TOP_RIGHT = {Tile.J: Tile.VERT, Tile.HORIZ: Tile.R}
_DROOP_BOTTOM_LEFT = {Tile.J: Tile.HORIZ, Tile.VERT: Tile.R}
_DROOP_BOTTOM_RIGHT = {Tile.BLANK: Tile.J, Tile.R: Tile.PLUS}
_DROOP_INTERIOR = {
    (Tile.HORIZ, Tile.HORIZ): (Tile.HORIZ, Tile.HORIZ),
    (Tile.PLUS, Tile.PLUS): (Tile.PLUS, Tile.PLUS),
    (Tile.HORIZ, Tile.R): (Tile.R, Tile.PLUS),
    (Tile.PLUS, Tile.VERT): (Tile.VERT, Tile.PLUS),
    (Tile.PLUS, Tile.J): (Tile.J, Tile.HORIZ),
}
_DROOP_KIND = {
    (Tile.R, Tile.BLANK): DroopKind.STANDARD,
    (Tile.R, Tile.R): DroopKind.FUSE,
    (Tile.PLUS, Tile.BLANK): DroopKind.SPLIT,
    (Tile.PLUS, Tile.R): DroopKind.SPLIT_FUSE,
}
_UNDROOP_KIND = {
    (Tile.BLANK, Tile.J): DroopKind.STANDARD,
    (Tile.BLANK, Tile.PLUS): DroopKind.FUSE,
    (Tile.J, Tile.J): DroopKind.SPLIT,
    (Tile.J, Tile.PLUS): DroopKind.SPLIT_FUSE,
}


def _check_droop(d: Mbpd, r: int, b: int, dd: int, up: bool) -> None:
    """Raise DroopPreconditionViolated naming the first failed clause.

    ``up=False`` checks the droop conditions, ``up=True`` the undroop.
    """
    if not (1 <= b < dd <= d.n):
        raise DroopPreconditionViolated(f"column range [{b},{dd}] invalid")
    if r >= d.n:
        raise DroopPreconditionViolated(f"rows [{r},{r+1}] out of range")
    exception_cell = (r, b) if up else (r + 1, dd)
    for i in (r, r + 1):
        for j in range(b, dd + 1):
            t = d.tile(i, j)
            if t.heavy and not ((i, j) == exception_cell and t is Tile.BLANK):
                raise DroopPreconditionViolated(
                    f"heavy tile at ({i},{j}) inside rectangle"
                )
    seg_row, paired_row = (r + 1, r) if up else (r, r + 1)
    if not is_pipe_segment(d, seg_row, b, dd):
        raise DroopPreconditionViolated(f"row {seg_row} [{b},{dd}] is not a pipe segment")
    if classify_light_sequence(d, paired_row, b + 1, dd - 1) is not LightFlavor.PAIRED:
        raise DroopPreconditionViolated(
            f"row {paired_row} ({b},{dd}) interior is not a paired light sequence"
        )
    # endpoint domains; for nonempty interiors these follow from the clauses
    # above, but adjacent columns need them checked explicitly
    if up:
        corners = {
            (r, b): (Tile.BLANK, Tile.J),
            (r, dd): (Tile.VERT, Tile.R),
            (r + 1, b): (Tile.HORIZ, Tile.R),
            (r + 1, dd): (Tile.J, Tile.PLUS),
        }
    else:
        corners = {
            (r, b): (Tile.R, Tile.PLUS),
            (r, dd): (Tile.J, Tile.HORIZ),
            (r + 1, b): (Tile.J, Tile.VERT),
            (r + 1, dd): (Tile.BLANK, Tile.R),
        }
    for (i, j), allowed in corners.items():
        if d.tile(i, j) not in allowed:
            raise DroopPreconditionViolated(
                f"corner ({i},{j}) is {d.tile(i, j).name}, not one of "
                f"{allowed[0].name}/{allowed[1].name}"
            )


def droop(d: Mbpd, r: int, b: int, dd: int) -> tuple[Mbpd, DroopKind]:
    """Drop the row-r pipe segment over columns [b, dd] into row r+1."""
    _check_droop(d, r, b, dd, up=False)
    tl, tr = d.tile(r, b), d.tile(r, dd)
    bl, br = d.tile(r + 1, b), d.tile(r + 1, dd)
    assert tl in _DROOP_TOP_LEFT and tr in _DROOP_TOP_RIGHT
    assert bl in _DROOP_BOTTOM_LEFT and br in _DROOP_BOTTOM_RIGHT
    changes = {
        (r, b): _DROOP_TOP_LEFT[tl],
        (r, dd): _DROOP_TOP_RIGHT[tr],
        (r + 1, b): _DROOP_BOTTOM_LEFT[bl],
        (r + 1, dd): _DROOP_BOTTOM_RIGHT[br],
    }
    for j in range(b + 1, dd):
        pair = (d.tile(r, j), d.tile(r + 1, j))
        top, bot = _DROOP_INTERIOR[pair]
        changes[(r, j)] = top
        changes[(r + 1, j)] = bot
    return d.with_tiles(changes), _DROOP_KIND[(tl, br)]


_UNDROOP_TOP_LEFT = {v: k for k, v in _DROOP_TOP_LEFT.items()}
_UNDROOP_TOP_RIGHT = {v: k for k, v in _DROOP_TOP_RIGHT.items()}
_UNDROOP_BOTTOM_LEFT = {v: k for k, v in _DROOP_BOTTOM_LEFT.items()}
_UNDROOP_BOTTOM_RIGHT = {v: k for k, v in _DROOP_BOTTOM_RIGHT.items()}
_UNDROOP_INTERIOR = {v: k for k, v in _DROOP_INTERIOR.items()}


def undroop(d: Mbpd, r: int, b: int, dd: int) -> tuple[Mbpd, DroopKind]:
    """Inverse of :func:`droop`; reports the kind of the droop it inverts."""
    _check_droop(d, r, b, dd, up=True)
    tl, tr = d.tile(r, b), d.tile(r, dd)
    bl, br = d.tile(r + 1, b), d.tile(r + 1, dd)
    assert tl in _UNDROOP_TOP_LEFT and tr in _UNDROOP_TOP_RIGHT
    assert bl in _UNDROOP_BOTTOM_LEFT and br in _UNDROOP_BOTTOM_RIGHT
    changes = {
        (r, b): _UNDROOP_TOP_LEFT[tl],
        (r, dd): _UNDROOP_TOP_RIGHT[tr],
        (r + 1, b): _UNDROOP_BOTTOM_LEFT[bl],
        (r + 1, dd): _UNDROOP_BOTTOM_RIGHT[br],
    }
    for j in range(b + 1, dd):
        pair = (d.tile(r, j), d.tile(r + 1, j))
        top, bot = _UNDROOP_INTERIOR[pair]
        changes[(r, j)] = top
        changes[(r + 1, j)] = bot
    return d.with_tiles(changes), _UNDROOP_KIND[(tl, br)]


def f_target_in_row(d: Mbpd, r: int) -> FTarget | None:
    """The classified target at the rightmost heavy tile of row r, if any."""
    if not 1 <= r <= d.n:
        raise ValueError(f"row {r} out of range")
    heavies = [j for j in range(1, d.n + 1) if d.tile(r, j).heavy]
    if not heavies:
        return None
    c = max(heavies)
    assert r < d.n, "heavy tiles cannot occur in the last row"

    j_right = [j for j in range(c + 1, d.n + 1) if d.tile(r + 1, j) is Tile.J]
    m_right = any(
        d.tile(r + 1, j) is Tile.MARKED_J for j in range(c + 1, d.n + 1)
    )
    if j_right:
        kind, cprime = "f", min(j_right)
    elif m_right:
        return None  # neither target condition can hold
    else:
        kind = "fstar"
        r_cols = [j for j in range(1, d.n + 1) if d.tile(r, j) is Tile.R]
        assert r_cols and max(r_cols) > c, "heavy tile must have an R to its right"
        cprime = max(r_cols)
    if any(not d.tile(r + 1, j).light for j in range(1, cprime)):
        return None

    # left trichotomy and the left window column
    if d.tile(r, c) is Tile.BLANK:
        b = c
        left = FLeft.B
    else:
        assert d.tile(r, c) is Tile.MARKED_J
        b = max(j for j in range(1, c) if d.tile(r, j) is Tile.R)
        left = FLeft.C if is_pipe_segment(d, r + 1, b, c) else FLeft.NOT_C

    # right trichotomy and the right droop column
    if kind == "fstar":
        right, rho = FRight.T, cprime
    elif d.tile(r, cprime) is Tile.PLUS:
        dd = max(j for j in range(c + 1, cprime) if d.tile(r, j) is Tile.R)
        assert find_doublecross(d, r, dd) == cprime
        right, rho = FRight.D, dd
    else:
        assert d.tile(r, cprime) in (Tile.VERT, Tile.R)
        right, rho = FRight.O, cprime

    # structural consequences of the target conditions
    assert d.tile(r + 1, c) in (Tile.HORIZ, Tile.R)
    assert is_pipe_segment(d, r + 1, c, cprime)
    if right is FRight.T:
        assert d.tile(r + 1, cprime) is Tile.PLUS

    return FTarget(r, c, kind, left, right, b, cprime, lam=c, rho=rho)


def find_f_target(d: Mbpd) -> FTarget | None:
    """The maximum target: bottommost then rightmost heavy tile.

    Returns None exactly when the grid is the identity grid.
    """
    for r in range(d.n, 0, -1):
        if any(d.tile(r, j).heavy for j in range(1, d.n + 1)):
            t = f_target_in_row(d, r)
            assert t is not None, "maximum heavy tile is always a target"
            return t
    return None


def f_move(d: Mbpd, r: int) -> Mbpd:
    """Move the heavy tile of row r down (or, when terminal, remove it)."""
    t = f_target_in_row(d, r)
    if t is None:
        raise NoTarget(r)
    return apply_f(d, t)


def apply_f(d: Mbpd, t: FTarget) -> Mbpd:
    """Execute a classified downward move: unmark, undroop, re-mark."""
    r, c = t.row, t.col
    if d.tile(r, c) is Tile.MARKED_J:
        d = d.with_tiles({(r, c): Tile.J})
    if t.left_case in (FLeft.B, FLeft.C):
        d, _ = undroop(d, r, c, t.rho)
    if d.tile(r + 1, t.cprime) is Tile.J:
        d = d.with_tiles({(r + 1, t.cprime): Tile.MARKED_J})
    # bookkeeping: the window holds no heavy tile except possibly the new
    # one at (r+1, cprime), present exactly in the nonterminal cases
    for j in range(t.b, t.cprime + 1):
        assert d.tile(r, j).light
        if j != t.cprime:
            assert d.tile(r + 1, j).light
    assert d.tile(r + 1, t.cprime).heavy == (t.right_case is not FRight.T)
    return d


def find_e_target(d: Mbpd, r: int) -> ETarget | None:
    """The classified target between rows r and r+1, if any.

    The target tile is the leftmost heavy tile of row r+1 when one exists;
    otherwise the rightmost R of the two rows marks an insertion target.
    """
    if not 1 <= r < d.n:
        raise ValueError(f"row pair ({r},{r+1}) out of range")
    heavies = [j for j in range(1, d.n + 1) if d.tile(r + 1, j).heavy]
    if heavies:
        kind, c = "e", min(heavies)
    else:
        kind = "estar"
        r_cols = [
            j
            for j in range(1, d.n + 1)
            if d.tile(r, j) is Tile.R or d.tile(r + 1, j) is Tile.R
        ]
        if not r_cols:
            return None
        c = max(r_cols)

    cprime = next(
        (
            j
            for j in range(c - 1, 0, -1)
            if d.tile(r, j) is Tile.R and not is_pipe_segment(d, r + 1, j, c)
        ),
        None,
    )
    if cprime is None:
        return None
    if any(d.tile(r, j).heavy for j in range(cprime + 1, d.n + 1)):
        return None

    if kind == "estar":
        right = ERight.I
    elif d.tile(r, c) is Tile.PLUS:
        right = ERight.P
    else:
        right = ERight.NOT_P
    if right is ERight.P:
        rho = max(j for j in range(1, c) if d.tile(r + 1, j) is Tile.R)
    else:
        rho = c

    if not is_pipe_segment(d, r, cprime, c):
        left = ELeft.L
        lam = min(j for j in range(cprime + 1, c) if d.tile(r, j) is Tile.J)
    else:
        dc = find_doublecross(d, r, cprime)
        if dc is not None:
            left, lam = ELeft.D, dc
            assert lam < c
        else:
            left, lam = ELeft.S, cprime

    return ETarget(r, c, kind, left, right, cprime, lam=lam, rho=rho)


def e_move(d: Mbpd, r: int) -> Mbpd:
    """Move the heavy tile of row r+1 up (or, when initial, insert one)."""
    t = find_e_target(d, r)
    if t is None:
        raise NoTarget(r)
    return apply_e(d, t)


def apply_e(d: Mbpd, t: ETarget) -> Mbpd:
    """Execute a classified upward move: unmark, droop, re-mark."""
    r, c = t.row, t.col
    if d.tile(r + 1, c) is Tile.MARKED_J:
        d = d.with_tiles({(r + 1, c): Tile.J})
    if t.left_case in (ELeft.S, ELeft.D):
        d, _ = droop(d, r, t.lam, t.rho)
    if d.tile(r, t.lam) is Tile.J:
        d = d.with_tiles({(r, t.lam): Tile.MARKED_J})
    # bookkeeping: (r, lam) is the unique heavy tile in the window, and the
    # old target cell is a plus in the initial case and a J otherwise
    for j in range(t.cprime, t.col + 1):
        assert d.tile(r + 1, j).light
        if j != t.lam:
            assert d.tile(r, j).light
    assert d.tile(r, t.lam).heavy
    expected = Tile.PLUS if t.right_case is ERight.I else Tile.J
    assert d.tile(r + 1, c) is expected
    return d
