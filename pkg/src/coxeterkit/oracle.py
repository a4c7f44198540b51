"""
Brute-force cross-checks that do not use the subset formula: tallying the
eigenvalue exponent tuples directly, and the exact characteristic polynomial
of Kronecker products of companion matrices.
"""
from __future__ import annotations

import dataclasses
import os
from collections.abc import Iterable, Sequence
from fractions import Fraction

import numpy as np

from .core import Weights
from .errors import DimCap, FiberCap, InternalInconsistency
from .exactpoly import IntPoly
from .recovery import MultiplicityTable

DEFAULT_MATRIX_CAP = 64
DEFAULT_FIBER_CAP = 10 ** 7


def matrix_cap() -> int:
    return int(os.environ.get("COXETERKIT_MATRIX_CAP", DEFAULT_MATRIX_CAP))


def fiber_cap() -> int:
    return int(os.environ.get("COXETERKIT_FIBER_CAP", DEFAULT_FIBER_CAP))


@dataclasses.dataclass(frozen=True, init=False)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(int(x) for x in r) for r in rows)
        if not rs or any(len(r) != len(rs) for r in rs):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rs)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([[c * x for x in r] for r in self.rows])

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self.rows))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        cols = list(zip(*other.rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def cartan(n: int) -> IntMatrix:
    """Cartan matrix of the linearly oriented path algebra with ``n - 1`` vertices."""
    return IntMatrix([[int(j >= i) for j in range(n - 1)] for i in range(n - 1)])


def _solve(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """``a^-1 b`` by Gauss-Jordan over the rationals; the result must be integral."""
    n = a.dim
    aug = [[Fraction(x) for x in a.rows[i]] + [Fraction(x) for x in b.rows[i]] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in out for x in row):
        raise InternalInconsistency("non-integral solution")
    return IntMatrix([[int(x) for x in row] for row in out])


def coxeter_from_cartan(n: int) -> IntMatrix:
    """``-C^-1 C^T`` for the Cartan matrix ``C`` of type A with ``n - 1`` vertices."""
    c = cartan(n)
    return _solve(c, -c.transpose())


def companion_coxeter(n: int) -> IntMatrix:
    """
    Coxeter matrix of the path algebra: ones on the superdiagonal and a last
    row of ``-1``.

    >>> companion_coxeter(3).rows
    ((0, 1), (-1, -1))
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    k = n - 1
    rows = [[int(j == i + 1) for j in range(k)] for i in range(k - 1)]
    rows.append([-1] * k)
    return IntMatrix(rows)


def kronecker(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return IntMatrix(
        [x * y for x in ra for y in rb]
        for ra in a.rows
        for rb in b.rows
    )


def kronecker_all(mats: Sequence[IntMatrix]) -> IntMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = kronecker(out, m)
    return out


def coxeter_matrix(w: Weights) -> IntMatrix:
    """Kronecker product of the companion matrices of all weights."""
    return kronecker_all([companion_coxeter(n) for n in w.values])


def charpoly_exact(m: IntMatrix, *, cap: int | None = None) -> IntPoly:
    """
    ``det(X I - m)`` over the integers, via Berkowitz's division-free recursion
    on leading principal submatrices.
    """
    cap = matrix_cap() if cap is None else cap
    n = m.dim
    if n > cap:
        raise DimCap(f"matrix dimension {n} exceeds the cap {cap}")
    a = m.rows
    poly = [1]  # highest degree first
    for r in range(1, n + 1):
        row = a[r - 1][:r - 1]
        vec = [a[i][r - 1] for i in range(r - 1)]
        col = [1, -a[r - 1][r - 1]]
        for _ in range(r - 1):
            col.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r - 1)) for i in range(r - 1)]
        poly = [
            sum(col[i - j] * poly[j] for j in range(max(0, i - r), min(i, r - 1) + 1))
            for i in range(r + 1)
        ]
    return IntPoly(reversed(poly))


def determinant(m: IntMatrix, *, cap: int | None = None) -> int:
    c0 = charpoly_exact(m, cap=cap)[0]
    return -c0 if m.dim % 2 else c0


def fiber_multiplicities(w: Weights, *, cap: int | None = None) -> MultiplicityTable:
    """
    Map every exponent tuple ``(a_1, ..., a_s)`` with ``0 < a_i < n_i`` to
    ``x = sum (n / n_i) a_i`` in ``Z/n``, ``n = lcm(w)``, and count fibres.
    All residues of additive order ``d`` have the same fibre size, which is
    ``m_d``.
    """
    cap = fiber_cap() if cap is None else cap
    if w.degree > cap:
        raise FiberCap(f"{w.degree} exponent tuples exceed the cap {cap}")
    n = w.lcm
    x = np.zeros(1, dtype=np.int64)
    for ni in w.values:
        step = (n // ni) * np.arange(1, ni, dtype=np.int64)
        x = ((x[:, None] + step[None, :]) % n).ravel()
    fibres = np.bincount(x, minlength=n)
    if int(fibres.sum()) != w.degree:
        raise InternalInconsistency("fibre tally does not cover every tuple")
    residues = np.arange(n, dtype=np.int64)
    orders = n // np.gcd(residues, n)
    table = {}
    for d in np.unique(orders):
        sizes = np.unique(fibres[orders == d])
        if len(sizes) != 1:
            raise InternalInconsistency(f"fibres over residues of order {d} differ: {sizes}")
        table[int(d)] = int(sizes[0])
    return MultiplicityTable(table)
