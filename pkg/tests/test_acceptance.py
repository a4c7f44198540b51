"""
Acceptance criteria 1-8, all at zero tolerance.

Each criterion is a function returning ``(ok, detail)``; under pytest one
PASS/FAIL line per criterion is written to the terminal, and running this
file directly prints the same eight lines.
"""
from __future__ import annotations

import itertools
import math
import sys
import time

import pytest

from coxeterkit.core import Weights, chi_cyclo, chi_poly, k_table
from coxeterkit.exactpoly import CycloExponents, IntPoly, reciprocal, substitute_negx
from coxeterkit.oracle import charpoly_exact, coxeter_matrix, fiber_multiplicities
from coxeterkit.recovery import MultiplicityTable, canonical_multiset, k_values, multiplicities, recover
from coxeterkit.spectral import (is_self_reciprocal, k_top_prime_power, m1_prime_power,
                                 one_is_eigenvalue, periodicity_order)

DIVISORS_420 = [1, 2, 3, 4, 5, 6, 7, 10, 12, 14, 15, 20, 21, 28, 30, 35, 42, 60, 70, 84, 105,
                140, 210, 420]


def sweep():
    """Entries in [2, 10], 1 <= s <= 4, at most one 2."""
    for s in range(1, 5):
        for combo in itertools.combinations_with_replacement(range(2, 11), s):
            if combo.count(2) <= 1:
                yield Weights(combo)


def _first_failure(cases, check):
    n = 0
    for case in cases:
        n += 1
        why = check(case)
        if why:
            return False, f"{case}: {why}"
    return True, f"{n} cases"


def criterion_1():
    a = chi_cyclo(Weights([3, 4, 5, 6, 7]))
    b = chi_cyclo(Weights([2, 3, 4, 5, 6, 7]))
    ok = (a.degree == 720
          and a.table == {35: 2, 70: 2, 105: 2, 140: 4, 210: 1, 420: 3}
          and b.table == {35: 2, 70: 2, 105: 1, 140: 4, 210: 2, 420: 3}
          and chi_poly(Weights([3, 4, 5, 6, 7])).degree == 720)
    return ok, f"{a} / {b}"


def criterion_2():
    rows = {
        (3, 4, 5, 6, 7): [-1, 0, 1, 1, 1, -2, 1, 0, 3, 0, -1, -1, -1, -1, 2, -1, 2, -3, 0, -3, 1, 1,
                          -2, 3],
        (2, 3, 4, 5, 6, 7): [1, -1, -1, 1, -1, -1, -1, 1, 3, 1, 1, -1, 1, -1, 1, 1, 1, -3, -1, -3,
                             -1, 1, -1, 3],
    }
    for w, row in rows.items():
        t = multiplicities(chi_poly(Weights(w)))
        k = k_values(t, 420)
        if sorted(k) != DIVISORS_420 or [k[d] for d in DIVISORS_420] != row:
            return False, f"{list(w)}: got {[k.get(d) for d in DIVISORS_420]}"
    return True, "2 rows x 24 divisors"


def criterion_3():
    expected = {
        (2, 2, 3): {3: 1}, (2, 3, 3): {2: 2, 6: 1}, (2, 3, 4): {3: 1, 12: 1}, (2, 3, 5): {30: 1},
        (3, 3, 3): {1: 2, 3: 3}, (2, 4, 4): {1: 2, 2: 3, 4: 2}, (2, 3, 6): {1: 2, 2: 2, 3: 2, 6: 1},
    }
    for w, table in expected.items():
        if chi_poly(Weights(w)) != CycloExponents(table).to_poly():
            return False, f"{list(w)}"
    return True, f"{len(expected)} polynomials"


def criterion_4():
    expected = {
        (2, 4, 6): (15, {1: 0, 2: 1, 3: 1, 4: 1, 6: 1, 12: 2}),
        (2, 3, 4, 6): (30, {1: 2, 2: 2, 3: 1, 4: 4, 6: 2, 12: 3}),
        (2, 4, 6, 6): (75, {1: 5, 2: 4, 3: 4, 4: 9, 6: 4, 12: 8}),
    }
    for w, (deg, row) in expected.items():
        f = chi_poly(Weights(w))
        t = multiplicities(f)
        if f.degree != deg or {d: t[d] for d in row} != row or set(t.table) - set(row):
            return False, f"{list(w)}: degree {f.degree}, table {t.table}"
    return True, "m_1 = 0, 2, 5; degrees 15, 30, 75"


def criterion_5():
    start = time.perf_counter()

    def check(w):
        got = canonical_multiset(recover(chi_poly(w)))
        return None if got == w else f"recovered {got}"

    ok, detail = _first_failure(sweep(), check)
    elapsed = time.perf_counter() - start
    return ok and elapsed < 120, f"{detail} in {elapsed:.1f}s"


def criterion_6():
    fiber_cases = matrix_cases = 0

    def check(w):
        nonlocal fiber_cases, matrix_cases
        cyc = MultiplicityTable.from_cyclo(chi_cyclo(w))
        if w.degree <= 10 ** 5:
            fiber_cases += 1
            if fiber_multiplicities(w, cap=10 ** 5) != cyc:
                return "fiber tally differs"
        if w.degree <= 16:
            matrix_cases += 1
            if charpoly_exact(coxeter_matrix(w), cap=16) != chi_poly(w):
                return "characteristic polynomial differs"
        return None

    ok, detail = _first_failure(sweep(), check)
    return ok, f"{detail}; fiber {fiber_cases}, matrix {matrix_cases}"


def _invariants(w: Weights) -> str | None:
    f = chi_poly(w)
    cyc = chi_cyclo(w)
    l, s = w.degree, w.s
    if f.degree != math.prod(n - 1 for n in w.values):
        return "degree"
    if f[0] != (-1) ** (l * (s + 1)):
        return "constant term"
    if chi_poly(w + [2]) != substitute_negx(f) * (-1) ** l:
        return "appending 2"
    if chi_poly(w + [2, 2]) != f:
        return "appending 2, 2"
    star = reciprocal(f)
    if star not in (f, -f):
        return "not +-self-reciprocal"
    if not ((star == f) == is_self_reciprocal(w) == (cyc[1] % 2 == 0)):
        return "self-reciprocity criterion"
    if cyc[w.lcm] <= 0 or periodicity_order(w) != w.lcm or math.lcm(*cyc.table) != w.lcm:
        return "top multiplicity / order"
    if one_is_eigenvalue(w) != (cyc[1] > 0):
        return "eigenvalue-one criterion"
    return None


def criterion_7():
    return _first_failure(sweep(), _invariants)


def criterion_8():
    def check(case):
        p, exps = case
        w = Weights([p ** e for e in exps])
        s, e = len(exps), max(exps)
        m1, kt = m1_prime_power(p, exps), k_top_prime_power(p, exps, e)
        if m1 != chi_cyclo(w)[1]:
            return f"m_1 {m1} != {chi_cyclo(w)[1]}"
        if kt != p ** e * k_table(w).get(p ** e, 0):
            return f"p^e k {kt} != {p ** e * k_table(w).get(p ** e, 0)}"
        m1_zero = s == 1 or (p == 2 and s % 2 == 1 and all(x == 1 for x in exps[:-1]))
        if (m1 == 0) != m1_zero:
            return "m_1 zero pattern"
        if (kt == 0) != (p ** e == 2 and s % 2 == 0):
            return "k zero pattern"
        return None

    cases = [(p, exps) for p in (2, 3, 5) for s in range(1, 5)
             for exps in itertools.combinations_with_replacement(range(1, 4), s)]
    return _first_failure(cases, check)


CRITERIA = {
    1: ("multiplicities of [3..7] and [2..7]", criterion_1),
    2: ("signed k rows over the divisors of 420", criterion_2),
    3: ("small Dynkin and tubular polynomials", criterion_3),
    4: ("eigenvalue-one multiplicity rows", criterion_4),
    5: ("exhaustive recovery roundtrip", criterion_5),
    6: ("fiber and matrix oracle equivalence", criterion_6),
    7: ("invariant suite on the sweep", criterion_7),
    8: ("prime-power closed forms", criterion_8),
}


def report(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    ok, detail = fn()
    return ok, f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({detail})"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = report(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [report(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
