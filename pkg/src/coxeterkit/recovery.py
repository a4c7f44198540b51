"""
Recover the weight multiset from its Coxeter polynomial.

The pipeline is: cyclotomic multiplicities ``m_d`` -> working modulus ``n``
-> signed ``k_d`` by Moebius inversion on the divisors of ``n`` -> counts of
each weight by induction over the divisors.  Only the parity of the number of
weights equal to 2 is recoverable, since appending ``[2, 2]`` does not change
the polynomial.
"""
from __future__ import annotations

import dataclasses
import math
from collections.abc import Mapping

import numpy as np

from .core import Weights, chi_poly
from .errors import EmptyTable, InconsistentPolynomial, NotCyclotomicProduct, ZeroPolynomial
from .exactpoly import CycloExponents, IntPoly, cyclotomic, divmod_poly, reciprocal
from .ntheory import divisors, mobius, next_prime, orders_with_totient_at_most, totient


@dataclasses.dataclass(frozen=True)
class MultiplicityTable:
    """Nonzero cyclotomic multiplicities ``d -> m_d`` of a polynomial."""
    table: Mapping[int, int]

    def __post_init__(self):
        clean = {int(d): int(m) for d, m in sorted(self.table.items()) if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError(f"negative multiplicity in {clean}")
        object.__setattr__(self, "table", clean)

    def __getitem__(self, d: int) -> int:
        return self.table.get(d, 0)

    @property
    def degree(self) -> int:
        return sum(m * totient(d) for d, m in self.table.items())

    @property
    def N(self) -> int:
        """Order of periodicity: the lcm of all ``d`` with ``m_d > 0``."""
        if not self.table:
            raise EmptyTable("no cyclotomic factors")
        return math.lcm(*self.table)

    @classmethod
    def from_cyclo(cls, c: CycloExponents) -> MultiplicityTable:
        return cls(dict(c.table))


def _power_sums(monic: tuple[int, ...], q: int, upto: int, known: np.ndarray | None) -> np.ndarray:
    """
    Newton power sums ``p_1 .. p_upto`` of the roots of a monic polynomial,
    modulo the prime ``q``; extends ``known`` if given.
    """
    deg = len(monic) - 1
    # c[i] is the coefficient of X^(deg - i)
    c = np.array([monic[deg - i] % q for i in range(1, deg + 1)], dtype=np.int64)
    crev = c[::-1].copy()
    p = np.zeros(upto + 1, dtype=np.int64)
    start = 1
    if known is not None:
        p[:len(known)] = known
        start = len(known)
    for k in range(start, upto + 1):
        m = min(k - 1, deg)
        acc = int(np.dot(crev[deg - m:], p[k - m:k])) if m else 0
        if k <= deg:
            acc += k * int(c[k - 1])
        p[k] = (-acc) % q
    return p


def multiplicities(f: IntPoly) -> MultiplicityTable:
    """
    Cyclotomic multiplicities of ``f``.

    Candidates are all ``d`` with ``totient(d) <= deg f``.  The multiplicities
    are read off the power sums of the roots (bounded by ``deg f`` for roots
    of unity, so exact modulo a prime above ``2 deg f``) and then confirmed by
    exact reconstruction; anything that is not a unit times a product of
    cyclotomic polynomials raises :class:`NotCyclotomicProduct`.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no multiplicities")
    deg = f.degree
    if f.lead not in (1, -1) or f[0] not in (1, -1):
        raise NotCyclotomicProduct(f"{f} is not a product of cyclotomic polynomials")
    if deg == 0:
        return MultiplicityTable({})
    if reciprocal(f) not in (f, -f):
        raise NotCyclotomicProduct(f"{f} is not (anti)palindromic")
    monic = f if f.lead == 1 else -f

    candidates = orders_with_totient_at_most(deg)
    dmax = candidates[-1]
    q = next_prime(2 * deg + 1)
    if deg * q * q >= 2 ** 63:
        raise NotImplementedError(f"degree {deg} is beyond the supported range")

    p = None
    length = 8
    while True:
        length = min(length, dmax)
        p = _power_sums(monic.coeffs, q, length, p)
        table = _table_from_power_sums(p, q, candidates, deg)
        if table is not None and CycloExponents(table).to_poly() == monic:
            return MultiplicityTable(table)
        if length == dmax:
            raise NotCyclotomicProduct(f"{f} is not a product of cyclotomic polynomials")
        length *= 2


def _table_from_power_sums(p: np.ndarray, q: int, candidates, deg: int) -> dict[int, int] | None:
    length = len(p) - 1
    sums = [int(x) - q if int(x) > q // 2 else int(x) for x in p]
    if any(abs(x) > deg for x in sums[1:]):
        return None
    # p_j = sum_{e | j} e * E_e, where f = prod (X^e - 1)^E_e up to sign
    expo = {}
    for e in range(1, length + 1):
        acc = sum(mobius(e // t) * sums[t] for t in divisors(e))
        if acc % e:
            return None
        if acc:
            expo[e] = acc // e
    table = {}
    for d in candidates:
        if d > length:
            break
        m = sum(E for e, E in expo.items() if e % d == 0)
        if m < 0:
            return None
        if m:
            table[d] = m
    if sum(m * totient(d) for d, m in table.items()) != deg:
        return None
    return table


def multiplicities_trial(f: IntPoly) -> MultiplicityTable:
    """
    Reference implementation: trial-divide by every cyclotomic polynomial
    whose degree fits.  Quadratic in the degree and meant for testing.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no multiplicities")
    table = {}
    rest = f
    for d in orders_with_totient_at_most(f.degree):
        phi = cyclotomic(d)
        while rest.degree >= phi.degree:
            quot, rem = divmod_poly(rest, phi)
            if not rem.is_zero():
                break
            rest = quot
            table[d] = table.get(d, 0) + 1
    if rest.coeffs not in ((1,), (-1,)):
        raise NotCyclotomicProduct(f"{f} leaves the non-unit cofactor {rest}")
    return MultiplicityTable(table)


def working_modulus(t: MultiplicityTable) -> int:
    """A small even multiple of ``n_I`` determined by the multiplicities alone."""
    N = t.N
    return N if N % 2 == 0 else 2 * N


def k_values(t: MultiplicityTable, n: int) -> dict[int, int]:
    """
    Signed values ``(-1)^s * k_d`` for all ``d | n``, by Moebius inversion of
    ``(-1)^s m_d = sum_{d | c | n} k_c``.
    """
    divs = divisors(n)
    return {d: sum(mobius(c // d) * t[c] for c in divs if c % d == 0) for d in divs}


@dataclasses.dataclass(frozen=True)
class RecoveredWeights:
    """Result of :func:`recover`.  ``counts`` covers weights ``>= 3`` only."""
    counts: Mapping[int, int]
    two_parity: int
    s_parity: int
    n: int
    signed_k: Mapping[int, int] = dataclasses.field(default_factory=dict, compare=False)
    table: MultiplicityTable | None = dataclasses.field(default=None, compare=False)


def _exact_log(value: int, base: int) -> int | None:
    """``e >= 0`` with ``base**e == value``, for ``|base| >= 2``."""
    e, acc = 0, 1
    while abs(acc) < abs(value):
        acc *= base
        e += 1
    return e if acc == value else None


def recover(f: IntPoly) -> RecoveredWeights:
    """
    Recover the weights of a Coxeter polynomial.

    Raises :class:`NotCyclotomicProduct` or :class:`InconsistentPolynomial`
    when ``f`` is not the polynomial of any multiset; the final answer is
    re-expanded and compared with ``f``, so a returned result is always
    exact.
    """
    t = multiplicities(f)
    if not t.table:
        raise InconsistentPolynomial(f"{f} has degree 0; every multiset has positive degree")
    n = working_modulus(t)
    signed = k_values(t, n)

    sign = signed[1]
    if sign not in (1, -1):
        raise InconsistentPolynomial(f"(-1)^s k_1 = {sign}, expected +-1")
    s_parity = 0 if sign == 1 else 1
    k = {d: sign * v for d, v in signed.items()}
    if k[2] not in (0, -1):
        raise InconsistentPolynomial(f"k_2 = {k[2]}, expected 0 or -1")
    two_parity = -k[2]

    counts: dict[int, int] = {}
    for d in divisors(n):
        if d <= 2:
            continue
        lhs = sum(c * k[c] for c in divisors(d))
        known = -1 if (d % 2 == 0 and two_parity) else 1
        for c, cnt in counts.items():
            if d % c == 0:
                known *= (1 - c) ** cnt
        quot, rem = divmod(lhs, known)
        e = None if rem else _exact_log(quot, 1 - d)
        if e is None:
            raise InconsistentPolynomial(
                f"at d = {d}: {lhs} / {known} is not a power of {1 - d}")
        if e:
            counts[d] = e

    if (two_parity + sum(counts.values())) % 2 != s_parity:
        raise InconsistentPolynomial("parity of the number of weights does not match k_1")
    if not counts and not two_parity:
        raise InconsistentPolynomial(
            f"{f} belongs only to multisets made of pairs of 2s, none with at most one 2")
    result = RecoveredWeights(counts, two_parity, s_parity, n, signed, t)
    if chi_poly(canonical_multiset(result)) != f:
        raise InconsistentPolynomial(f"{f} is not the Coxeter polynomial of the recovered weights")
    return result


def canonical_multiset(r: RecoveredWeights) -> Weights:
    """The unique multiset with at most one 2 matching ``r``."""
    vals = [2] * r.two_parity
    for d, cnt in sorted(r.counts.items()):
        vals += [d] * cnt
    return Weights(vals)
