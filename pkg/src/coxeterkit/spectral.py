"""
Spectral properties of the Coxeter transformation of a weight multiset:
periodicity, whether 1 is an eigenvalue (gcd and prime graphs), prime-power
closed forms, and self-reciprocity of the Coxeter polynomial.
"""
from __future__ import annotations

import dataclasses
import math
from collections.abc import Sequence

from .core import Weights, chi_cyclo
from .errors import ContainsTwo, TooManyTwos
from .ntheory import prime_divisors, valuation


def _at_most_one_two(w: Weights) -> None:
    if w.twos > 1:
        raise TooManyTwos(f"{w} contains the weight 2 {w.twos} times; at most once is allowed")


def periodicity_order(w: Weights) -> int:
    """Order of the Coxeter transformation, which is ``lcm(w)``."""
    _at_most_one_two(w)
    return w.lcm


def algebra_periodicity_order(w: Weights) -> int:
    """Order of the Coxeter transformation of the tensor product algebra (weights >= 3)."""
    if w.twos:
        raise ContainsTwo(f"{w} contains the weight 2")
    return w.lcm if w.s % 2 else math.lcm(w.lcm, 2)


def top_multiplicity_positive(w: Weights) -> bool:
    """Whether primitive ``lcm(w)``-th roots of unity are eigenvalues."""
    _at_most_one_two(w)
    return chi_cyclo(w)[w.lcm] > 0


@dataclasses.dataclass(frozen=True)
class GcdGraph:
    """
    Gcd graph on the weights (vertices are indices into ``weights``).

    ``components[p]`` is the vertex set of the nontrivial component of the
    prime graph for ``p``: all weights divisible by ``p`` when there are at
    least two of them, otherwise empty.
    """
    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    primes: tuple[int, ...]
    components: dict[int, frozenset[int]]

    def isolated(self) -> list[int]:
        touched = {v for e in self.edges for v in e}
        return [i for i in range(len(self.weights)) if i not in touched]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.weights),
            "edges": sorted(list(e) for e in self.edges),
            "primes": list(self.primes),
            "components": {str(p): sorted(vs) for p, vs in self.components.items()},
        }


def gcd_graph(w: Weights) -> GcdGraph:
    vals = w.values
    edges = frozenset(
        (i, j)
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
        if math.gcd(vals[i], vals[j]) > 1
    )
    primes = tuple(prime_divisors(w.lcm))
    components = {}
    for p in primes:
        members = frozenset(i for i, v in enumerate(vals) if v % p == 0)
        components[p] = members if len(members) >= 2 else frozenset()
    return GcdGraph(vals, edges, primes, components)


def eigenvalue_one_obstruction(w: Weights) -> str | None:
    """
    Which graph condition rules out the eigenvalue 1: ``"i"`` (isolated vertex),
    ``"ii"`` (the 2-component condition) or ``None`` when 1 is an eigenvalue.
    """
    _at_most_one_two(w)
    g = gcd_graph(w)
    if g.isolated():
        return "i"
    if w.lcm % 2:
        return None
    evens = g.components[2]
    if len(evens) % 2 == 0:
        return None
    for p in g.primes[1:]:
        if evens & g.components[p]:
            return None
    exps = sorted(valuation(2, w.values[i]) for i in evens)
    if all(e == 1 for e in exps[:-1]):
        return "ii"
    return None


def one_is_eigenvalue(w: Weights) -> bool:
    return eigenvalue_one_obstruction(w) is None


def m1_prime_power(p: int, exps: Sequence[int]) -> int:
    """
    Multiplicity of the eigenvalue 1 for the weights ``[p^e_1, ..., p^e_s]``.

    >>> m1_prime_power(3, [1, 1])
    2
    """
    es = sorted(exps)
    if not es or es[0] < 1:
        raise ValueError(f"exponents must be positive, got {list(exps)}")
    s = len(es)
    total = 0
    prod = 1
    for j in range(2, s + 1):
        prod *= p ** es[j - 2] - 1
        total += (-1) ** (s - j) * prod
    return total


def k_top_prime_power(p: int, exps: Sequence[int], e: int) -> int:
    """
    ``p^e * k_{p^e}`` for the weights ``[p^e_1, ..., p^e_s]`` where ``e`` is the
    largest exponent.
    """
    if not exps or max(exps) != e:
        raise ValueError(f"e = {e} must be the largest of {list(exps)}")
    lower = [x for x in exps if x < e]
    top = len(exps) - len(lower)
    return math.prod(1 - p ** x for x in lower) * ((1 - p ** e) ** top - 1)


def is_self_reciprocal(w: Weights) -> bool:
    return math.gcd(w.s, *w.values) % 2 == 1
