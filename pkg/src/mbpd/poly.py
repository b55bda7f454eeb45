"""Exact sparse polynomials in b (the deformation parameter) and x1..xn.

Terms are stored as a map from exponent vectors ``(e_b, e_1, ..., e_n)`` to
nonzero integer coefficients.  Arithmetic is exact; Python integers never
overflow.  The canonical printing order is graded lexicographic: ascending
total degree, then descending lexicographic on the exponent vector.
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = [
    "Poly",
    "NonDivisible",
    "divided_difference",
    "pi_op",
]


class NonDivisible(ArithmeticError):
    """Division by (x_i - x_{i+1}) left a remainder; indicates a bug."""


class Poly:
    """An immutable sparse polynomial over the integers.

    ``nvars`` counts the x variables; every exponent vector has length
    ``nvars + 1`` with the b exponent first.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] = ()):
        self.nvars = nvars
        clean = {}
        for exps, coeff in dict(terms).items():
            if coeff == 0:
                continue
            if len(exps) != nvars + 1 or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for nvars={nvars}")
            clean[tuple(exps)] = coeff
        self._terms = clean

    # construction helpers

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def const(c: int, nvars: int) -> "Poly":
        return Poly(nvars, {(0,) * (nvars + 1): c})

    @staticmethod
    def one(nvars: int) -> "Poly":
        return Poly.const(1, nvars)

    @staticmethod
    def x(i: int, nvars: int) -> "Poly":
        if not 1 <= i <= nvars:
            raise ValueError(f"x_{i} out of range for nvars={nvars}")
        e = [0] * (nvars + 1)
        e[i] = 1
        return Poly(nvars, {tuple(e): 1})

    @staticmethod
    def b(nvars: int) -> "Poly":
        e = [0] * (nvars + 1)
        e[0] = 1
        return Poly(nvars, {tuple(e): 1})

    @staticmethod
    def monomial(b_exp: int, x_exps: Iterable[int], coeff: int, nvars: int) -> "Poly":
        xs = tuple(x_exps)
        return Poly(nvars, {(b_exp, *xs, *(0,) * (nvars - len(xs))): coeff})

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, int):
            return Poly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # inspection

    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    def beta_slice(self, k: int) -> "Poly":
        """The part with b-exponent exactly k (the b power removed)."""
        return Poly(
            self.nvars,
            {e: c for e, c in self._terms.items() if e[0] == k},
        )

    def lowest_x_degree_part(self) -> "Poly":
        """Terms of minimal total x-degree, b exponents kept."""
        if not self._terms:
            return self
        low = min(sum(e[1:]) for e in self._terms)
        return Poly(
            self.nvars,
            {e: c for e, c in self._terms.items() if sum(e[1:]) == low},
        )

    def subs_beta(self, value: int) -> "Poly":
        """Numerically substitute the b variable."""
        terms: dict[tuple[int, ...], int] = {}
        for e, c in self._terms.items():
            e2 = (0, *e[1:])
            terms[e2] = terms.get(e2, 0) + c * value ** e[0]
        return Poly(self.nvars, terms)

    def swap_x(self, i: int) -> "Poly":
        """Exchange x_i and x_{i+1}."""
        if not 1 <= i < self.nvars:
            raise ValueError(f"swap index {i} out of range")
        terms = {}
        for e, c in self._terms.items():
            le = list(e)
            le[i], le[i + 1] = le[i + 1], le[i]
            terms[tuple(le)] = c
        return Poly(self.nvars, terms)

    # printing

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Canonical order: ascending total degree, then descending lex."""
        return sorted(
            self._terms.items(),
            key=lambda item: (sum(item[0]), tuple(-e for e in item[0])),
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            if exps[0]:
                factors.append("b" if exps[0] == 1 else f"b^{exps[0]}")
            for i, e in enumerate(exps[1:], start=1):
                if e:
                    factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def to_json_terms(self) -> list[dict]:
        return [
            {"beta": exps[0], "x": list(exps[1:]), "coeff": coeff}
            for exps, coeff in self.sorted_terms()
        ]


def divided_difference(f: Poly, i: int) -> Poly:
    """(f - s_i f) / (x_i - x_{i+1}), computed by synthetic division.

    The numerator is antisymmetric in x_i, x_{i+1}, hence exactly
    divisible; a nonzero remainder raises :class:`NonDivisible`.
    """
    if not 1 <= i < f.nvars:
        raise ValueError(f"divided difference index {i} out of range")
    g = f - f.swap_x(i)
    # split g by the exponent of x_i: g = sum_k g_k * x_i^k, then divide by
    # (x_i - x_{i+1}) via Horner: q_{k-1} = g_k + x_{i+1} * q_k
    by_deg: dict[int, dict[tuple[int, ...], int]] = {}
    for e, c in g.terms().items():
        k = e[i]
        stripped = e[:i] + (0,) + e[i + 1 :]
        by_deg.setdefault(k, {})[stripped] = c
    if not by_deg:
        return Poly.zero(f.nvars)
    top = max(by_deg)
    carry = Poly.zero(f.nvars)  # q_k, free of x_i
    xi1 = Poly.x(i + 1, f.nvars)
    xi = Poly.x(i, f.nvars)
    quotient = Poly.zero(f.nvars)
    for k in range(top, 0, -1):
        carry = Poly(f.nvars, by_deg.get(k, {})) + xi1 * carry
        quotient = quotient + carry * _xpow(xi, k - 1)
    remainder = Poly(f.nvars, by_deg.get(0, {})) + xi1 * carry
    if remainder:
        raise NonDivisible(f"remainder {remainder} after division")
    return quotient


def _xpow(x: Poly, k: int) -> Poly:
    p = Poly.one(x.nvars)
    for _ in range(k):
        p = p * x
    return p


def pi_op(f: Poly, i: int) -> Poly:
    """The Demazure-type operator: divided difference of (1 + b*x_{i+1}) f."""
    g = f + Poly.b(f.nvars) * Poly.x(i + 1, f.nvars) * f
    return divided_difference(g, i)
