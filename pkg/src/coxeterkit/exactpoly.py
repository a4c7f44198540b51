"""
Dense integer polynomials, cyclotomic polynomials and factored products of
binomials ``X^n - 1``.

A polynomial is stored lowest degree first, so ``1 - 2X + X^3`` is
``IntPoly((1, -2, 0, 1))``.  The zero polynomial has no coefficients.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from collections.abc import Iterable, Mapping

import gmpy2

from .errors import DivByZero, NotAPolynomial, NotDivisible, ZeroPolynomial
from .ntheory import divisors, mobius, totient

# Operand length above which multiplication switches to Kronecker substitution.
KRONECKER_THRESHOLD = 40


@dataclasses.dataclass(frozen=True, init=False)
class IntPoly:
    """
    A polynomial with integer coefficients.

    >>> IntPoly([-1, 0, 1])
    IntPoly('X^2 - 1')
    >>> IntPoly([3, 0, 0]).coeffs
    (3,)
    """
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> IntPoly:
        return cls([0] * n + [c])

    @classmethod
    def binomial(cls, n: int) -> IntPoly:
        """``X^n - 1``."""
        return cls([-1] + [0] * (n - 1) + [1])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if parts:
                parts.append(" - " if c < 0 else " + ")
            elif c < 0:
                parts.append("-")
            a = abs(c)
            if i == 0:
                parts.append(str(a))
            else:
                mono = "X" if i == 1 else f"X^{i}"
                parts.append(mono if a == 1 else f"{a}{mono}")
        return "".join(parts)

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str | int]) -> IntPoly:
        return cls(int(c) for c in data)


def _coerce(x: IntPoly | int) -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly([x])


def _schoolbook(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def _pack(cs: tuple[int, ...], nbytes: int) -> int:
    # evaluates the polynomial at 2^(8*nbytes); coefficients may be negative
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in cs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in cs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    n = len(a) + len(b) - 1
    bound = min(len(a), len(b)) * max(map(abs, a)) * max(map(abs, b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    value = int(gmpy2.mpz(_pack(a, nbytes)) * gmpy2.mpz(_pack(b, nbytes)))
    # shift every digit into [0, 2^(8*nbytes)) so the bytes unpack directly
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    raw = (value + offset).to_bytes(n * nbytes, "little")
    return [int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half
            for k in range(n)]


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product."""
    if a.is_zero() or b.is_zero():
        return IntPoly()
    if min(len(a.coeffs), len(b.coeffs)) < KRONECKER_THRESHOLD:
        return IntPoly(_schoolbook(a.coeffs, b.coeffs))
    return IntPoly(_kronecker(a.coeffs, b.coeffs))


def divmod_poly(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """
    Division with remainder for a divisor whose leading coefficient is a unit
    (the only case needed here); otherwise every step must divide exactly.
    """
    if b.is_zero():
        raise DivByZero("division by the zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return IntPoly(), a
    lead = b.coeffs[-1]
    terms = [(i, c) for i, c in enumerate(b.coeffs[:-1]) if c]
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q, r = divmod(c, lead)
        if r:
            raise NotDivisible(f"leading coefficient {lead} does not divide {c}")
        quot[k - db] = q
        rem[k] = 0
        shift = k - db
        for i, bi in terms:
            rem[shift + i] -= q * bi
    return IntPoly(quot), IntPoly(rem)


def div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    Return ``q`` with ``a == q * b``; raise :class:`NotDivisible` otherwise.

    >>> div_exact(IntPoly([-1, 0, 0, 1]), IntPoly([-1, 1]))
    IntPoly('X^2 + X + 1')
    """
    q, r = divmod_poly(a, b)
    if not r.is_zero():
        raise NotDivisible(f"nonzero remainder {r}")
    return q


def _mul_binomial(cs: list[int], n: int) -> list[int]:
    """Coefficients of ``f * (X^n - 1)``."""
    out = [0] * n + cs
    for i, c in enumerate(cs):
        out[i] -= c
    return out


def _div_binomial(cs: list[int], n: int) -> list[int]:
    """Coefficients of ``f / (X^n - 1)``, raising if the division is inexact."""
    if not any(cs):
        return []
    if len(cs) <= n:
        raise NotDivisible(f"X^{n} - 1 does not divide a polynomial of degree {len(cs) - 1}")
    q = [0] * (len(cs) - n)
    # a_i = q_{i-n} - q_i, solved from the top down
    for i in range(len(cs) - 1, n - 1, -1):
        q[i - n] = cs[i] + (q[i] if i < len(q) else 0)
    for i in range(n):
        if cs[i] + (q[i] if i < len(q) else 0):
            raise NotDivisible(f"X^{n} - 1 does not divide the polynomial")
    return q


def _binomial_power(n: int, e: int) -> IntPoly:
    """``(X^n - 1)^e`` by the binomial theorem."""
    out = [0] * (n * e + 1)
    c = 1
    for k in range(e + 1):
        # term C(e, k) X^{nk} (-1)^{e-k}
        out[n * k] = c if (e - k) % 2 == 0 else -c
        c = c * (e - k) // (k + 1)
    return IntPoly(out)


@functools.lru_cache(maxsize=2048)
def cyclotomic(d: int) -> IntPoly:
    """
    The ``d``-th cyclotomic polynomial, as the Moebius product of ``X^e - 1``.

    >>> cyclotomic(12)
    IntPoly('X^4 - X^2 + 1')
    """
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    cs = [1]
    down = []
    for e in divisors(d):
        mu = mobius(d // e)
        if mu == 1:
            cs = _mul_binomial(cs, e)
        elif mu == -1:
            down.append(e)
    for e in down:
        cs = _div_binomial(cs, e)
    poly = IntPoly(cs)
    assert poly.degree == totient(d)
    return poly


def reciprocal(f: IntPoly) -> IntPoly:
    """``X^deg(f) * f(1/X)``: the coefficient sequence reversed."""
    if f.is_zero():
        raise ZeroPolynomial("reciprocal of the zero polynomial")
    return IntPoly(reversed(f.coeffs))


def substitute_negx(f: IntPoly) -> IntPoly:
    return IntPoly(-c if i % 2 else c for i, c in enumerate(f.coeffs))


def cyclo_multiplicity(f: IntPoly, d: int) -> int:
    """Largest ``k`` such that the ``d``-th cyclotomic polynomial to the ``k`` divides ``f``."""
    if f.is_zero():
        raise ZeroPolynomial("every polynomial divides zero")
    phi = cyclotomic(d)
    k = 0
    while f.degree >= phi.degree:
        q, r = divmod_poly(f, phi)
        if not r.is_zero():
            break
        f, k = q, k + 1
    return k


@dataclasses.dataclass(frozen=True)
class CycloExponents:
    """Multiplicity ``m_d`` of each cyclotomic factor; absent ``d`` means zero."""
    table: Mapping[int, int]

    def __post_init__(self):
        clean = {int(d): int(m) for d, m in sorted(self.table.items()) if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError(f"negative cyclotomic multiplicity in {clean}")
        object.__setattr__(self, "table", clean)

    def __getitem__(self, d: int) -> int:
        return self.table.get(d, 0)

    @property
    def degree(self) -> int:
        return sum(m * totient(d) for d, m in self.table.items())

    def to_poly(self) -> IntPoly:
        result = IntPoly([1])
        for d, m in self.table.items():
            result = result * cyclotomic(d) ** m
        return result

    def __str__(self) -> str:
        if not self.table:
            return "1"
        return "".join(f"Φ{d}" if m == 1 else f"Φ{d}^{m}" for d, m in self.table.items())


@dataclasses.dataclass(frozen=True)
class FactoredRational:
    """The rational function ``prod_n (X^n - 1)^e_n``; exponents may be negative."""
    table: Mapping[int, int]

    def __post_init__(self):
        clean = {int(n): int(e) for n, e in sorted(self.table.items()) if e}
        object.__setattr__(self, "table", clean)

    @property
    def degree(self) -> int:
        return sum(n * e for n, e in self.table.items())

    def cyclotomic_exponents(self) -> dict[int, int]:
        """Net exponent of every cyclotomic factor; negative values mean a pole."""
        net: dict[int, int] = {}
        for n, e in self.table.items():
            for d in divisors(n):
                net[d] = net.get(d, 0) + e
        return {d: m for d, m in sorted(net.items()) if m}


def expand(fr: FactoredRational) -> IntPoly:
    """
    Expand a factored rational function that is in fact a polynomial.

    >>> expand(FactoredRational({6: 1, 1: 1, 2: -1, 3: -1}))
    IntPoly('X^2 - X + 1')
    """
    if fr.degree < 0:
        raise NotAPolynomial(f"{fr.table} has negative degree")
    num = IntPoly([1])
    for n, e in fr.table.items():
        if e > 0:
            num = num * _binomial_power(n, e)
    cs = list(num.coeffs)
    # largest denominators first keeps the running degree smallest soonest
    for n, e in sorted(fr.table.items(), reverse=True):
        for _ in range(-e):
            try:
                cs = _div_binomial(cs, n)
            except NotDivisible:
                raise NotAPolynomial(f"{fr.table} is not a polynomial") from None
    return IntPoly(cs)
