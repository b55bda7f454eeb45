"""Biletters and reverse compatible pairs.

A biletter is a pair ``(i, a)`` with ``1 <= i <= a`` (and ``a < n`` once a
grid size is fixed).  A reverse compatible pair is a sequence of biletters
that is strictly decreasing in the order

    (i1, a1) > (i2, a2)  iff  i1 > i2, or i1 = i2 and a1 < a2,

so the row entries weakly decrease and, within a row, the letters strictly
increase.  Sequences in this order correspond exactly to subsets of the
biletter alphabet.

The raise/lower operations may pass through transient states that violate
the order; such working biwords carry ``working=True``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .perms import Permutation, hecke_product
from .pipedreams import PipeDream

__all__ = [
    "Biletter",
    "Rcp",
    "PreconditionViolated",
    "biletter_greater",
    "rcp_weight",
    "rcp_permutation",
    "rcp1_remove",
    "rcp2_raise",
    "rrcp1_prepend",
    "rrcp2_lower",
    "pd_of_rcp",
    "rcp_of_pd",
    "enumerate_rcp",
    "parse_biword",
    "format_biword",
]


class PreconditionViolated(ValueError):
    """An operation's precondition on the first biletter failed."""


@dataclass(frozen=True, order=False)
class Biletter:
    i: int
    a: int

    def __post_init__(self):
        if not 1 <= self.i <= self.a:
            raise ValueError(f"biletter ({self.i},{self.a}) violates 1 <= i <= a")

    def __str__(self) -> str:
        return f"({self.i},{self.a})"


def biletter_greater(x: Biletter, y: Biletter) -> bool:
    """The strict order biletters must decrease in."""
    return x.i > y.i or (x.i == y.i and x.a < y.a)


@dataclass(frozen=True)
class Rcp:
    seq: tuple[Biletter, ...]
    working: bool = False

    def __post_init__(self):
        if not self.working:
            for x, y in zip(self.seq, self.seq[1:]):
                if not biletter_greater(x, y):
                    raise ValueError(f"biletters not strictly decreasing: {x} !> {y}")

    @staticmethod
    def of(*pairs: tuple[int, int]) -> "Rcp":
        return Rcp(tuple(Biletter(i, a) for i, a in pairs))

    def __len__(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return format_biword(self)

    def check_bounds(self, n: int) -> "Rcp":
        for bl in self.seq:
            if bl.a >= n:
                raise ValueError(f"biletter {bl} needs a < n = {n}")
        return self


def _rebuild(seq: tuple[Biletter, ...]) -> Rcp:
    """Strict Rcp when the order holds, working biword otherwise."""
    ok = all(biletter_greater(x, y) for x, y in zip(seq, seq[1:]))
    return Rcp(seq, working=not ok)


def rcp_weight(b: Rcp, n: int) -> tuple[int, ...]:
    """Biletters per row value."""
    m = [0] * n
    for bl in b.seq:
        m[bl.i - 1] += 1
    return tuple(m)


def rcp_permutation(b: Rcp, n: int) -> Permutation:
    """Demazure product of the letters, last biletter's letter first."""
    return hecke_product([bl.a for bl in reversed(b.seq)], n)


def rcp1_remove(b: Rcp) -> Rcp:
    """Remove the first biletter, which must be of the form (i, i)."""
    if not b.seq:
        raise PreconditionViolated("biword is empty")
    first = b.seq[0]
    if first.i != first.a:
        raise PreconditionViolated(f"first biletter {first} has i != a")
    return _rebuild(b.seq[1:])


def rcp2_raise(b: Rcp) -> Rcp:
    """Replace a first biletter (i, a) with i < a by (i+1, a)."""
    if not b.seq:
        raise PreconditionViolated("biword is empty")
    first = b.seq[0]
    if first.i >= first.a:
        raise PreconditionViolated(f"first biletter {first} has i = a")
    return _rebuild((Biletter(first.i + 1, first.a),) + b.seq[1:])


def rrcp1_prepend(b: Rcp, i: int) -> Rcp:
    """Prepend the biletter (i, i)."""
    return _rebuild((Biletter(i, i),) + b.seq)


def rrcp2_lower(b: Rcp) -> Rcp:
    """Replace a first biletter (i, a) with i > 1 by (i-1, a)."""
    if not b.seq:
        raise PreconditionViolated("biword is empty")
    first = b.seq[0]
    if first.i <= 1:
        raise PreconditionViolated(f"first biletter {first} has i = 1")
    return _rebuild((Biletter(first.i - 1, first.a),) + b.seq[1:])


def pd_of_rcp(b: Rcp, n: int) -> PipeDream:
    """Crossings at (i, a - i + 1) for each biletter (i, a)."""
    b.check_bounds(n)
    return PipeDream(n, frozenset((bl.i, bl.a - bl.i + 1) for bl in b.seq))


def rcp_of_pd(p: PipeDream) -> Rcp:
    """Inverse of :func:`pd_of_rcp`: cell (i, j) becomes (i, i + j - 1)."""
    letters = [Biletter(i, i + j - 1) for (i, j) in p.crossings]
    letters.sort(key=lambda bl: (-bl.i, bl.a))
    return Rcp(tuple(letters))


def all_biletters(n: int) -> list[Biletter]:
    return [Biletter(i, a) for a in range(1, n) for i in range(1, a + 1)]


def enumerate_rcp(n: int) -> Iterator[Rcp]:
    """All reverse compatible pairs: each alphabet subset sorted uniquely."""
    alphabet = all_biletters(n)
    m = len(alphabet)
    for mask in range(1 << m):
        chosen = [alphabet[k] for k in range(m) if mask >> k & 1]
        chosen.sort(key=lambda bl: (-bl.i, bl.a))
        yield Rcp(tuple(chosen))


def format_biword(b: Rcp) -> str:
    if not b.seq:
        return "()"
    return ",".join(str(bl) for bl in b.seq)


def parse_biword(text: str) -> Rcp:
    text = text.strip()
    if text in ("()", ""):
        return Rcp(())
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if not pairs:
        raise ValueError(f"cannot parse biword {text!r}")
    return Rcp(tuple(Biletter(int(i), int(a)) for i, a in pairs))
