"""Small number-theoretic helpers on top of sympy's factorisation routines."""
from __future__ import annotations

import functools
import math
from collections.abc import Iterable

from sympy import factorint as _factorint
from sympy import divisors as _divisors
from sympy import nextprime as _nextprime
from sympy import primerange as _primerange


@functools.lru_cache(maxsize=4096)
def factorint(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in _factorint(n).items()}


@functools.lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in ascending order."""
    return tuple(int(d) for d in _divisors(n))


def mobius(n: int) -> int:
    """
    >>> [mobius(k) for k in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    fac = factorint(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p in factorint(n):
        result = result // p * (p - 1)
    return result


def lcm(values: Iterable[int]) -> int:
    return math.lcm(*values)


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    return int(_nextprime(n))


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n))


def valuation(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n``."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@functools.lru_cache(maxsize=64)
def orders_with_totient_at_most(bound: int) -> tuple[int, ...]:
    """
    Every ``d`` with ``totient(d) <= bound``, ascending.

    Built by extending prime-power products while the totient stays in range;
    only primes ``p`` with ``p - 1 <= bound`` can occur.

    >>> orders_with_totient_at_most(2)
    (1, 2, 3, 4, 6)
    """
    if bound < 1:
        return ()
    primes = [int(p) for p in _primerange(2, bound + 2)]
    found = []

    def extend(start: int, d: int, phi: int) -> None:
        found.append(d)
        for idx in range(start, len(primes)):
            p = primes[idx]
            phi_p = phi * (p - 1)
            if phi_p > bound:
                # primes ascend, so later ones overshoot as well
                break
            q, phi_q = d * p, phi_p
            while phi_q <= bound:
                extend(idx + 1, q, phi_q)
                q *= p
                phi_q *= p

    extend(0, 1, 1)
    return tuple(sorted(found))
