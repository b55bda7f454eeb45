"""Grothendieck polynomials by recursion and by three enumerative sums.

The recursion starts from the staircase monomial at the longest element and
descends along ascents.  The enumerative routes sum, over all objects with
a given associated permutation, the monomial ``b^(size - length) * x^weight``
where size is the crossing count, biword length, or heavy-tile count.  All
four must agree coefficient for coefficient.
"""

from __future__ import annotations

from .biwords import enumerate_rcp, rcp_permutation, rcp_weight
from .grid import enumerate_mbpd, weight
from .perms import Permutation, all_permutations, mbpd_permutation
from .pipedreams import enumerate_pd, pd_permutation, pd_weight
from .poly import Poly, pi_op

__all__ = [
    "staircase_monomial",
    "groth_recursive",
    "groth_table_recursive",
    "groth_from_pd",
    "groth_from_rcp",
    "groth_from_mbpd",
    "schubert",
]


def staircase_monomial(n: int) -> Poly:
    """x1^(n-1) x2^(n-2) ... x_{n-1}: the polynomial of the longest element."""
    return Poly.monomial(0, tuple(range(n - 1, -1, -1)), 1, n)


def groth_recursive(w: Permutation, strategy: str = "min") -> Poly:
    """Descend from the longest element along right ascents.

    ``strategy`` picks which ascent to follow ("min" or "max"); the result
    is independent of the choice.
    """
    n = w.n
    if w == Permutation.longest(n):
        return staircase_monomial(n)
    ascents = w.right_ascents()
    i = min(ascents) if strategy == "min" else max(ascents)
    return pi_op(groth_recursive(w.right_mult(i), strategy), i)


def groth_table_recursive(n: int, strategy: str = "min") -> dict[Permutation, Poly]:
    """All of S_n at once, sharing work down the length filtration."""
    table = {Permutation.longest(n): staircase_monomial(n)}
    perms = sorted(all_permutations(n), key=lambda w: -w.length)
    for w in perms:
        if w in table:
            continue
        ascents = w.right_ascents()
        i = min(ascents) if strategy == "min" else max(ascents)
        v = w.right_mult(i)
        if v not in table:
            # perms are processed in decreasing length, so v is present
            raise AssertionError("length filtration out of order")
        table[w] = pi_op(table[v], i)
    return table


def _sum_over(objects, perm_of, weight_of, size_of, n: int) -> dict[Permutation, Poly]:
    table: dict[Permutation, Poly] = {}
    for obj in objects:
        w = perm_of(obj)
        mono = Poly.monomial(size_of(obj) - w.length, weight_of(obj), 1, n)
        table[w] = table.get(w, Poly.zero(n)) + mono
    return table


def groth_table_pd(n: int) -> dict[Permutation, Poly]:
    return _sum_over(
        enumerate_pd(n),
        pd_permutation,
        pd_weight,
        lambda p: len(p.crossings),
        n,
    )


def groth_table_rcp(n: int) -> dict[Permutation, Poly]:
    return _sum_over(
        enumerate_rcp(n),
        lambda b: rcp_permutation(b, n),
        lambda b: rcp_weight(b, n),
        len,
        n,
    )


def groth_table_mbpd(n: int) -> dict[Permutation, Poly]:
    return _sum_over(
        enumerate_mbpd(n),
        mbpd_permutation,
        weight,
        lambda d: d.heavy_count(),
        n,
    )


def groth_from_pd(w: Permutation, n: int | None = None) -> Poly:
    """Sum over pipedreams with associated permutation w."""
    n = n or w.n
    return groth_table_pd(n).get(w, Poly.zero(n))


def groth_from_rcp(w: Permutation, n: int | None = None) -> Poly:
    """Sum over reverse compatible pairs with associated permutation w."""
    n = n or w.n
    return groth_table_rcp(n).get(w, Poly.zero(n))


def groth_from_mbpd(w: Permutation, n: int | None = None) -> Poly:
    """Sum over marked bumpless pipedreams with associated permutation w."""
    n = n or w.n
    return groth_table_mbpd(n).get(w, Poly.zero(n))


def schubert(w: Permutation) -> Poly:
    """The b-free slice, which is also the lowest x-degree component."""
    g = groth_recursive(w)
    s = g.beta_slice(0)
    assert s == g.lowest_x_degree_part(), "b^0 slice must be the bottom degree"
    return s
