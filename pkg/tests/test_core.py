import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from coxeterkit.core import (Weights, algebra_coxeter_poly, chi_cyclo, chi_factored, chi_poly,
                             cy_dimension, determinant_sign, k_table)
from coxeterkit.errors import InvalidWeights, SubsetOverflow
from coxeterkit.exactpoly import IntPoly, cyclotomic, expand, substitute_negx
from coxeterkit.ntheory import totient

X = sympy.Symbol("X")

weight_lists = st.lists(st.integers(2, 12), min_size=1, max_size=4)


def phi_product(table):
    out = IntPoly([1])
    for d, m in table.items():
        out = out * cyclotomic(d) ** m
    return out


def sympy_chi(values):
    """Subset product evaluated as a rational function by sympy, then cancelled."""
    s = len(values)
    expr = sympy.Integer(1)
    for mask in range(1 << s):
        sub = [values[i] for i in range(s) if mask >> i & 1]
        n_j = math.lcm(*sub) if sub else 1
        exp = (-1) ** (s - len(sub)) * math.prod(sub) // n_j
        expr *= (X ** n_j - 1) ** exp
    num, den = sympy.fraction(sympy.cancel(expr))
    assert den == 1
    return IntPoly(reversed(sympy.Poly(num, X).all_coeffs()))


class TestWeights:
    def test_sorted(self):
        assert Weights([5, 3, 4]).values == (3, 4, 5)

    @pytest.mark.parametrize("bad", [[], [1], [0, 3], [3, -2], [2.5], [True, 3]])
    def test_rejects(self, bad):
        with pytest.raises(InvalidWeights):
            Weights(bad)

    def test_derived_quantities(self):
        w = Weights([2, 4, 6])
        assert (w.s, w.lcm, w.degree, w.twos) == (3, 12, 15, 1)
        assert str(w) == "[2,4,6]"
        assert (w + [2]).twos == 2


class TestForward:
    @pytest.mark.parametrize("n", [2, 3, 5, 7, 12])
    def test_single_weight(self, n):
        assert chi_factored(Weights([n])).table == {n: 1, 1: -1}

    @pytest.mark.parametrize("a, b", [(3, 5), (4, 9), (2, 7)])
    def test_coprime_pair(self, a, b):
        assert chi_factored(Weights([a, b])).table == {1: 1, a * b: 1, a: -1, b: -1}

    def test_three_threes(self):
        assert expand(chi_factored(Weights([3, 3, 3]))) == phi_product({1: 2, 3: 3})

    @pytest.mark.parametrize("w, table", [
        ([3, 4, 5, 6, 7], {35: 2, 70: 2, 105: 2, 140: 4, 210: 1, 420: 3}),
        ([2, 3, 4, 5, 6, 7], {35: 2, 70: 2, 105: 1, 140: 4, 210: 2, 420: 3}),
        ([2], {2: 1}),
    ])
    def test_chi_cyclo(self, w, table):
        assert chi_cyclo(Weights(w)).table == table

    @pytest.mark.parametrize("w, table", [
        ([2, 3, 5], {30: 1}),
        ([2, 3, 3], {2: 2, 6: 1}),
    ])
    def test_chi_poly(self, w, table):
        assert chi_poly(Weights(w)) == phi_product(table)

    @pytest.mark.parametrize("n", range(2, 12))
    def test_two_twos_give_geometric_series(self, n):
        assert chi_poly(Weights([2, 2, n])) == IntPoly([1] * n)

    @settings(max_examples=25)
    @given(st.lists(st.integers(2, 8), min_size=1, max_size=3))
    def test_against_sympy_cancellation(self, values):
        assert chi_poly(Weights(values)) == sympy_chi(values)

    @given(weight_lists)
    def test_cyclo_route_agrees(self, values):
        w = Weights(values)
        c = chi_cyclo(w)
        assert c.to_poly() == chi_poly(w)
        assert sum(m * totient(d) for d, m in c.table.items()) == w.degree

    @given(weight_lists)
    def test_k_table_sums_to_weighted_degree(self, values):
        # sum_c c * k_c = prod(1 - n_i), the value at the full divisor lattice
        w = Weights(values)
        assert sum(c * k for c, k in k_table(w).items()) == math.prod(1 - n for n in values)

    def test_subset_cap(self):
        with pytest.raises(SubsetOverflow):
            chi_factored(Weights([3] * 5), cap=4)


class TestAlgebraSign:
    def test_even_s_appends_two(self):
        assert algebra_coxeter_poly(Weights([3, 4])) == chi_poly(Weights([2, 3, 4]))

    def test_even_s_sign_relation(self):
        w = Weights([3, 4])
        assert algebra_coxeter_poly(w) == substitute_negx(chi_poly(w)) * (-1) ** w.degree

    @pytest.mark.parametrize("w, expected", [
        ([2, 3, 5], cyclotomic(30)),
        ([3], IntPoly([1, 1, 1])),
    ])
    def test_odd_s_unchanged(self, w, expected):
        assert algebra_coxeter_poly(Weights(w)) == expected

    @pytest.mark.parametrize("w, sign", [([2], -1), ([3, 3], 1), ([2, 3, 5], 1), ([2, 2], 1), ([4], -1)])
    def test_determinant_sign(self, w, sign):
        assert determinant_sign(Weights(w)) == sign


class TestCYDimension:
    @pytest.mark.parametrize("n", range(2, 10))
    def test_single(self, n):
        assert cy_dimension(Weights([n])).reduced == Fraction(n - 2, n)

    def test_three_threes(self):
        cy = cy_dimension(Weights([3, 3, 3]))
        assert (cy.numerator, cy.denominator, cy.reduced) == (3, 3, 1)

    def test_three_to_seven(self):
        cy = cy_dimension(Weights([3, 4, 5, 6, 7]))
        assert (cy.numerator, cy.denominator) == (1182, 420)
        assert cy.to_json() == {"num": 1182, "den": 420, "reduced": {"num": 197, "den": 70}}
