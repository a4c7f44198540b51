"""
Coxeter polynomials of tensor products of linearly oriented type A path
algebras, computed from the multiset of weights ``[n_1, ..., n_s]``.

Two independent routes are provided: :func:`chi_factored` gives the product of
binomials ``X^n - 1`` attached to subsets of the weights, and :func:`chi_cyclo`
gives the cyclotomic multiplicities via divisor-lattice sums.  Both expand to
the same polynomial.
"""
from __future__ import annotations

import dataclasses
import math
from collections.abc import Iterable
from fractions import Fraction

from .errors import InternalInconsistency, InvalidWeights, SubsetOverflow
from .exactpoly import CycloExponents, FactoredRational, IntPoly, expand
from .ntheory import divisors

DEFAULT_SUBSET_CAP = 20


@dataclasses.dataclass(frozen=True, init=False)
class Weights:
    """
    A multiset of integers ``>= 2``, kept in ascending order.

    >>> Weights([7, 3, 5]).values
    (3, 5, 7)
    """
    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = []
        for v in values:
            if isinstance(v, bool) or int(v) != v:
                raise InvalidWeights(f"weights must be integers, got {v!r}")
            vals.append(int(v))
        if not vals:
            raise InvalidWeights("at least one weight is required")
        bad = [v for v in vals if v < 2]
        if bad:
            raise InvalidWeights(f"weights must be >= 2, got {bad}")
        object.__setattr__(self, "values", tuple(sorted(vals)))

    @property
    def s(self) -> int:
        return len(self.values)

    @property
    def lcm(self) -> int:
        """``n_I``, the least common multiple of all weights."""
        return math.lcm(*self.values)

    @property
    def degree(self) -> int:
        """``l``: the product of ``n_i - 1``, the rank of the Coxeter transformation."""
        return math.prod(v - 1 for v in self.values)

    @property
    def twos(self) -> int:
        return self.values.count(2)

    def __add__(self, more: Iterable[int]) -> Weights:
        return Weights(self.values + tuple(more))

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.values)) + "]"


def _subsets(w: Weights, cap: int) -> list[tuple[int, int, int]]:
    """``(n_J, prod_{i in J} n_i, |J|)`` for every subset ``J``, the empty one included."""
    if w.s > cap:
        raise SubsetOverflow(f"{w.s} weights exceed the subset cap of {cap} (2^s enumeration)")
    subsets = [(1, 1, 0)]
    for n in w.values:
        subsets += [(math.lcm(l, n), p * n, k + 1) for l, p, k in subsets]
    return subsets


def chi_factored(w: Weights, *, cap: int = DEFAULT_SUBSET_CAP) -> FactoredRational:
    """
    The Coxeter polynomial as a product of powers of ``X^n - 1``.

    >>> chi_factored(Weights([2, 3])).table
    {1: 1, 2: -1, 3: -1, 6: 1}
    """
    exps: dict[int, int] = {}
    for n_j, prod, size in _subsets(w, cap):
        sign = -1 if (w.s - size) % 2 else 1
        exps[n_j] = exps.get(n_j, 0) + sign * (prod // n_j)
    return FactoredRational(exps)


def k_table(w: Weights, *, cap: int = DEFAULT_SUBSET_CAP) -> dict[int, int]:
    """``k_c`` for every divisor ``c`` of ``n_I`` (zeros included)."""
    acc = {c: Fraction(0) for c in divisors(w.lcm)}
    for n_j, prod, size in _subsets(w, cap):
        acc[n_j] += Fraction((-1) ** size * prod, n_j)
    out = {}
    for c, k in acc.items():
        if k.denominator != 1:
            raise InternalInconsistency(f"k_{c} = {k} is not an integer for {w}")
        out[c] = int(k)
    return out


def chi_cyclo(w: Weights, *, cap: int = DEFAULT_SUBSET_CAP) -> CycloExponents:
    """
    Cyclotomic multiplicities ``m_d`` of the Coxeter polynomial.

    >>> chi_cyclo(Weights([3, 3, 3])).table
    {1: 2, 3: 3}
    """
    ks = k_table(w, cap=cap)
    sign = -1 if w.s % 2 else 1
    n = w.lcm
    table = {}
    for d in divisors(n):
        m = sign * sum(ks[c] for c in divisors(n) if c % d == 0)
        if m < 0:
            raise InternalInconsistency(f"m_{d} = {m} < 0 for {w}")
        table[d] = m
    return CycloExponents(table)


def chi_poly(w: Weights, *, cap: int = DEFAULT_SUBSET_CAP) -> IntPoly:
    """Expanded Coxeter polynomial ``chi_[n_1,...,n_s]``."""
    return expand(chi_factored(w, cap=cap))


def algebra_coxeter_poly(w: Weights, *, cap: int = DEFAULT_SUBSET_CAP) -> IntPoly:
    """
    Coxeter polynomial of the algebra itself: the sign convention of the
    tensor product adds a factor ``[2]`` when the number of factors is even.
    """
    if w.s % 2:
        return chi_poly(w, cap=cap)
    return chi_poly(w + [2], cap=cap)


def determinant_sign(w: Weights) -> int:
    return -1 if (w.degree * w.s) % 2 else 1


@dataclasses.dataclass(frozen=True)
class CYDimension:
    """Fractional Calabi-Yau dimension, kept over the denominator ``n_I``."""
    numerator: int
    denominator: int

    @property
    def reduced(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def to_json(self) -> dict:
        r = self.reduced
        return {
            "num": self.numerator,
            "den": self.denominator,
            "reduced": {"num": r.numerator, "den": r.denominator},
        }


def cy_dimension(w: Weights) -> CYDimension:
    """
    ``(s * n_I - 2 * sum(n_I / n_i)) / n_I``.

    The formula is meant for weights ``>= 3``; it is evaluated for any input.

    >>> cy_dimension(Weights([3, 3, 3]))
    CYDimension(numerator=3, denominator=3)
    """
    n = w.lcm
    return CYDimension(w.s * n - 2 * sum(n // v for v in w.values), n)
