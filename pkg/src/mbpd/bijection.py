"""The bijection between marked bumpless pipedreams and biwords.

One direction pops biletters: starting at the maximum target in row i,
apply downward moves in rows i, i+1, ... until the terminal move at some
row a, emitting the biletter (i, a).  The other direction pushes: an
insertion move at row a followed by upward moves in rows a-1, ..., i.
Iterating row pops empties any grid to the identity grid; folding row
pushes over a biword right-to-left rebuilds it.

A coarse pop/push implementation is the primary path; the single-step
remove/raise recursion is kept alongside for differential testing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .biwords import Biletter, Rcp, rcp1_remove, rcp2_raise
from .grid import Mbpd, identity_mbpd, weight
from .moves import (
    ETarget,
    FTarget,
    NoTarget,
    apply_e,
    apply_f,
    f_target_in_row,
    find_e_target,
    find_f_target,
)
from .perms import mbpd_permutation

__all__ = [
    "IdentityInput",
    "PushPreconditionViolated",
    "PopResult",
    "MoveRecord",
    "row_pop",
    "row_pop_trace",
    "phi",
    "phi_trace",
    "row_push",
    "row_push_trace",
    "psi",
    "psi_trace",
    "phi_fine",
    "psi_fine",
    "is_reduced_mbpd",
    "is_reduced_rcp",
]


class IdentityInput(ValueError):
    """row_pop requires a grid with at least one heavy tile."""


class PushPreconditionViolated(ValueError):
    """A push step had no target; the biword ordering must be invalid."""


@dataclass(frozen=True)
class PopResult:
    biletter: Biletter
    rest: Mbpd


@dataclass(frozen=True)
class MoveRecord:
    """One line of a move trace, e.g. ``F r=3 case=DC window=[3,4]x[2,5]``."""

    family: str  # "F" or "E"
    row: int
    case_label: str
    window: tuple[tuple[int, int], tuple[int, int]]
    lam: int
    rho: int

    @staticmethod
    def of_f(t: FTarget) -> "MoveRecord":
        return MoveRecord("F", t.row, t.case_label, t.window, t.lam, t.rho)

    @staticmethod
    def of_e(t: ETarget) -> "MoveRecord":
        return MoveRecord("E", t.row, t.case_label, t.window, t.lam, t.rho)

    def __str__(self) -> str:
        (r1, r2), (c1, c2) = self.window
        return (
            f"{self.family} r={self.row} case={self.case_label} "
            f"window=[{r1},{r2}]x[{c1},{c2}] λ={self.lam} ρ={self.rho}"
        )


def row_pop_trace(d: Mbpd) -> tuple[PopResult, tuple[MoveRecord, ...]]:
    """Pop one biletter, recording each move's classification."""
    t = find_f_target(d)
    if t is None:
        raise IdentityInput("the identity grid has nothing to pop")
    i = t.row
    records = []
    while t.kind == "f":
        records.append(MoveRecord.of_f(t))
        d = apply_f(d, t)
        t = f_target_in_row(d, t.row + 1)
        assert t is not None, "a nonterminal move always leaves a target below"
    records.append(MoveRecord.of_f(t))
    d = apply_f(d, t)
    return PopResult(Biletter(i, t.row), d), tuple(records)


def row_pop(d: Mbpd) -> PopResult:
    """Extract one biletter (i, a): moves in rows i..a-1, then terminal at a."""
    result, _ = row_pop_trace(d)
    return result


def phi_trace(d: Mbpd) -> tuple[Rcp, tuple[MoveRecord, ...]]:
    letters = []
    records: list[MoveRecord] = []
    while find_f_target(d) is not None:
        pop, recs = row_pop_trace(d)
        letters.append(pop.biletter)
        records.extend(recs)
        d = pop.rest
    return Rcp(tuple(letters)), tuple(records)


def phi(d: Mbpd) -> Rcp:
    """Iterated row pop; preserves weight and associated permutation."""
    return phi_trace(d)[0]


def row_push_trace(
    d: Mbpd, biletter: Biletter
) -> tuple[Mbpd, tuple[MoveRecord, ...]]:
    """Insert at row a, then carry the new heavy tile up to row i."""
    i, a = biletter.i, biletter.a
    if a >= d.n:
        raise PushPreconditionViolated(f"biletter {biletter} needs a < n = {d.n}")
    records = []
    for r in range(a, i - 1, -1):
        t = find_e_target(d, r)
        if t is None:
            raise PushPreconditionViolated(f"no target between rows {r},{r+1}")
        if r == a and t.kind != "estar":
            raise PushPreconditionViolated(
                f"push of {biletter} requires an insertion target at row {a}"
            )
        if r < a and t.kind != "e":
            raise PushPreconditionViolated(f"expected a carry target at row {r}")
        records.append(MoveRecord.of_e(t))
        d = apply_e(d, t)
    return d, tuple(records)


def row_push(d: Mbpd, biletter: Biletter) -> Mbpd:
    return row_push_trace(d, biletter)[0]


def psi_trace(b: Rcp, n: int) -> tuple[Mbpd, tuple[MoveRecord, ...]]:
    b.check_bounds(n)
    d = identity_mbpd(n)
    records: list[MoveRecord] = []
    for biletter in reversed(b.seq):
        d, recs = row_push_trace(d, biletter)
        records.extend(recs)
    return d, tuple(records)


def psi(b: Rcp, n: int) -> Mbpd:
    """Fold row pushes over the biword right to left, starting from identity."""
    return psi_trace(b, n)[0]


def phi_fine(d: Mbpd) -> Rcp:
    """Single-step recursion: terminal moves prepend (i,i), others lower.

    Differential twin of :func:`phi`; the two must agree everywhere.
    """
    t = find_f_target(d)
    if t is None:
        return Rcp(())
    if t.kind == "fstar":
        rest = phi_fine(apply_f(d, t))
        return Rcp((Biletter(t.row, t.row),) + rest.seq)
    rest = phi_fine(apply_f(d, t))
    first = rest.seq[0]
    assert first.i == t.row + 1
    return Rcp((Biletter(t.row, first.a),) + rest.seq[1:])


def psi_fine(b: Rcp, n: int) -> Mbpd:
    """Single-step recursion via remove/raise; differential twin of psi."""
    b.check_bounds(n)
    if not b.seq:
        return identity_mbpd(n)
    first = b.seq[0]
    if first.i == first.a:
        d = psi_fine(rcp1_remove(b), n)
        t = find_e_target(d, first.i)
        if t is None or t.kind != "estar":
            raise PushPreconditionViolated(f"no insertion target at row {first.i}")
        return apply_e(d, t)
    d = psi_fine(rcp2_raise(b), n)
    t = find_e_target(d, first.i)
    if t is None or t.kind != "e":
        raise PushPreconditionViolated(f"no carry target at row {first.i}")
    return apply_e(d, t)


def is_reduced_mbpd(d: Mbpd) -> bool:
    """Unmarked, and the heavy count equals the permutation's length."""
    return not d.is_marked() and d.heavy_count() == mbpd_permutation(d).length


def is_reduced_rcp(b: Rcp, n: int | None = None) -> bool:
    """The biword's length equals its permutation's length."""
    from .biwords import rcp_permutation

    if n is None:
        n = max((bl.a for bl in b.seq), default=0) + 1
    return len(b) == rcp_permutation(b, n).length
