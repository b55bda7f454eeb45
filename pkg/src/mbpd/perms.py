"""Permutations in one-line notation and the 0-Hecke (Demazure) product.

The Demazure product is the unique associative product on permutations with
``s_i * w = s_i w`` when that increases length and ``s_i * w = w``
otherwise.  Words of simple reflections are folded with the right-handed
version, which by associativity computes the same product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator

__all__ = [
    "Permutation",
    "demazure_left",
    "demazure_right",
    "hecke_product",
    "all_permutations",
    "mbpd_permutation",
    "strand_data",
    "strand_sweep",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation (1-based values)."""

    oneline: tuple[int, ...]

    def __post_init__(self):
        n = len(self.oneline)
        if sorted(self.oneline) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.oneline}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def longest(n: int) -> "Permutation":
        """The longest element n, n-1, ..., 1."""
        return Permutation(tuple(range(n, 0, -1)))

    @staticmethod
    def transposition(i: int, n: int) -> "Permutation":
        """The simple reflection s_i in S_n."""
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    @staticmethod
    def from_string(text: str) -> "Permutation":
        """Parse "1432" (digits, n <= 9) or "[1,4,3,2]" (comma form)."""
        text = text.strip()
        if text.startswith("["):
            vals = [int(v) for v in text.strip("[]").split(",")]
        else:
            vals = [int(ch) for ch in text]
        return Permutation(tuple(vals))

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.oneline, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        """Coxeter length = number of inversions."""
        w = self.oneline
        return sum(
            1
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )

    def right_mult(self, i: int) -> "Permutation":
        """w s_i: swap positions i, i+1."""
        w = list(self.oneline)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def left_mult(self, i: int) -> "Permutation":
        """s_i w: swap values i, i+1."""
        w = [v + 1 if v == i else v - 1 if v == i + 1 else v for v in self.oneline]
        return Permutation(tuple(w))

    def has_right_descent(self, i: int) -> bool:
        return self.oneline[i - 1] > self.oneline[i]

    def right_ascents(self) -> list[int]:
        return [i for i in range(1, self.n) if not self.has_right_descent(i)]

    def right_descents(self) -> list[int]:
        return [i for i in range(1, self.n) if self.has_right_descent(i)]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.oneline)
        return "[" + ",".join(str(v) for v in self.oneline) + "]"

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def demazure_left(i: int, w: Permutation) -> Permutation:
    """s_i * w: apply s_i on the left when it increases length."""
    if not 1 <= i < w.n:
        raise IndexError(f"simple reflection index {i} out of range for n={w.n}")
    sw = w.left_mult(i)
    return sw if sw.length > w.length else w


def demazure_right(w: Permutation, i: int) -> Permutation:
    """w * s_i: apply s_i on the right when it increases length."""
    if not 1 <= i < w.n:
        raise IndexError(f"simple reflection index {i} out of range for n={w.n}")
    ws = w.right_mult(i)
    return ws if ws.length > w.length else w


def hecke_product(word: Iterable[int], n: int) -> Permutation:
    """Fold the word into a single Demazure product, left to right.

    ``hecke_product([a, b, c], n)`` is ``s_a * s_b * s_c``.
    """
    w = Permutation.identity(n)
    for i in word:
        w = demazure_right(w, i)
    return w


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    for p in _itertools_permutations(range(1, n + 1)):
        yield Permutation(p)


def strand_data(grid) -> tuple[dict, dict, dict]:
    """Trace the geometric strands of a marked bumpless pipedream.

    Strand k enters at the right edge of row k and always passes straight
    through plus tiles.  Returns ``(exit_col, horiz, vert)`` where
    ``exit_col[k]`` is the bottom-edge exit column of strand k and
    ``horiz``/``vert`` map each plus cell to the strand passing through it
    horizontally/vertically.
    """
    n = grid.n
    exit_col: dict[int, int] = {}
    horiz: dict[tuple[int, int], int] = {}
    vert: dict[tuple[int, int], int] = {}
    for k in range(1, n + 1):
        i, j, came_from = k, n, "R"
        while i <= n:
            conn = grid.tile(i, j).connects
            if len(conn) == 4:
                (horiz if came_from == "R" else vert)[(i, j)] = k
            if came_from == "R":
                out = "L" if "L" in conn else "D"
            else:
                out = "D" if "D" in conn else "L"
            if out == "L":
                j, came_from = j - 1, "R"
            else:
                i, came_from = i + 1, "U"
        exit_col[k] = j
    return exit_col, horiz, vert


def strand_sweep(grid, plus_order: list[tuple[int, int]]) -> Permutation:
    """Resolve crossings along the given plus-cell order with 0-Hecke rules.

    Pipes start on their own strands; at each plus the two pipes cross if
    they have not crossed before, and otherwise bounce (swap strands).  The
    order must visit each strand's plus cells in traversal order; any order
    sorted by increasing (row - col) qualifies, since strands move only
    left and down.
    """
    n = grid.n
    exit_col, horiz, vert = strand_data(grid)
    pipe_on = {k: k for k in range(1, n + 1)}
    crossed: set[frozenset[int]] = set()
    for cell in plus_order:
        h, v = horiz[cell], vert[cell]
        pair = frozenset((pipe_on[h], pipe_on[v]))
        if pair in crossed:
            pipe_on[h], pipe_on[v] = pipe_on[v], pipe_on[h]
        else:
            crossed.add(pair)
    w = [0] * n
    for k in range(1, n + 1):
        w[pipe_on[k] - 1] = exit_col[k]
    return Permutation(tuple(w))


def mbpd_permutation(grid) -> Permutation:
    """The associated permutation of a marked bumpless pipedream.

    Pipe i enters at the right edge of row i; repeat crossings between a
    pair of pipes are treated as bumps.  Plus cells are processed in
    increasing (row - col), which refines the traversal order along every
    strand; the result does not depend on the tie-breaking.
    """
    n = grid.n
    cells = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if len(grid.tile(i, j).connects) == 4
    ]
    cells.sort(key=lambda ij: (ij[0] - ij[1], ij[0]))
    return strand_sweep(grid, cells)
