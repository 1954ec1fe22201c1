"""
Tests for the matrix biring and matrix expressions
"""

from fractions import Fraction

import pytest

from ncmod.core.algebra import load_builtin
from ncmod.core.biring import (
    RATIONALS,
    Carrier,
    Cr,
    GenMatrix,
    Leaf,
    Rc,
    Sum,
    Transpose,
    cr_product,
    depth,
    dualize,
    evaluate,
    identity,
    mat_sum,
    rc_product,
    render,
    shape,
    transpose,
    zeros,
)
from ncmod.core.exceptions import DimensionMismatchError


def rational(rows):
    return GenMatrix.from_rows([[Fraction(x) for x in row] for row in rows])


class TestProducts:
    """Test rc and cr products"""

    @pytest.fixture
    def ij_pair(self):
        q = load_builtin("quaternion")
        zero, i, j = q.zero, q.basis_element(1), q.basis_element(2)
        a = GenMatrix.from_rows([[zero, i], [zero, zero]], q)
        b = GenMatrix.from_rows([[zero, zero], [j, zero]], q)
        return q, a, b

    def test_rc_quaternion_entry(self, ij_pair):
        q, a, b = ij_pair
        result = rc_product(a, b)
        k = q.basis_element(3)
        assert result[0, 0] == k
        assert result[0, 1].is_zero()
        assert result[1, 0].is_zero()
        assert result[1, 1].is_zero()

    def test_cr_quaternion_entry(self, ij_pair):
        q, a, b = ij_pair
        result = cr_product(a, b)
        assert result[1, 1] == q.basis_element(3)
        assert result[0, 0].is_zero()

    def test_rational_example(self):
        a = rational([[1, 2], [3, 4]])
        b = rational([[0, 1], [1, 0]])
        assert rc_product(a, b) == rational([[2, 1], [4, 3]])
        assert cr_product(b, a) == rc_product(a, b)

    def test_common_identity(self, ij_pair):
        q, a, _ = ij_pair
        ident = identity(2, q)
        assert rc_product(ident, a) == a
        assert rc_product(a, ident) == a
        assert cr_product(a, ident) == a
        assert cr_product(ident, a) == a

    def test_rectangular_shapes(self):
        a = rational([[1, 2, 3]])
        b = rational([[1], [1], [1]])
        assert rc_product(a, b).shape == (1, 1)
        assert cr_product(a, b).shape == (3, 3)
        with pytest.raises(DimensionMismatchError):
            cr_product(a, a)
        with pytest.raises(DimensionMismatchError):
            rc_product(a, a)


class TestTransposeAndSum:
    """Test transpose and sum"""

    def test_transpose(self):
        q = load_builtin("quaternion")
        i = q.basis_element(1)
        a = GenMatrix.from_rows([[q.zero, i], [q.zero, q.zero]], q)
        assert transpose(a) == GenMatrix.from_rows([[q.zero, q.zero], [i, q.zero]], q)
        assert transpose(transpose(a)) == a
        assert transpose(identity(3)) == identity(3)

    def test_sum(self):
        a = rational([[1, 2], [3, 4]])
        assert mat_sum(a, -a) == zeros(2, 2)
        assert (a + a) == rational([[2, 4], [6, 8]])
        with pytest.raises(DimensionMismatchError):
            mat_sum(a, rational([[1, 2]]))

    def test_ragged_matrix_rejected(self):
        with pytest.raises(DimensionMismatchError):
            GenMatrix(2, 2, ((1, 2), (3,)), RATIONALS)


class TestExpressions:
    """Test expression trees and dualization"""

    @pytest.fixture
    def leaves(self):
        q = load_builtin("quaternion")
        one, i, j, k = q.basis()
        a = GenMatrix.from_rows([[i, j], [q.zero, k]], q)
        b = GenMatrix.from_rows([[one, q.zero], [k, i]], q)
        return a, b

    def test_evaluate_simple(self, leaves):
        a, b = leaves
        q = a.carrier
        assert evaluate(Leaf(a)) == a
        assert evaluate(Rc(Leaf(identity(2, q)), Leaf(a))) == a
        assert evaluate(Sum(Leaf(a), Leaf(-a))).is_zero()

    def test_shape_error_found_before_evaluation(self):
        a = rational([[1, 2, 3]])
        with pytest.raises(DimensionMismatchError):
            shape(Sum(Leaf(a), Leaf(transpose(a))))
        with pytest.raises(DimensionMismatchError):
            evaluate(Rc(Leaf(a), Leaf(a)))

    def test_dualize_rewrite(self, leaves):
        a, b = leaves
        assert dualize(Rc(Leaf(a), Leaf(b))) == Cr(Leaf(transpose(a)), Leaf(transpose(b)))

    def test_dualize_evaluates_to_transpose(self, leaves):
        a, b = leaves
        exprs = [
            Rc(Leaf(a), Leaf(b)),
            Cr(Leaf(a), Leaf(b)),
            Sum(Rc(Leaf(a), Transpose(Leaf(b))), Cr(Leaf(b), Leaf(a))),
            Rc(Cr(Leaf(a), Leaf(a)), Transpose(Sum(Leaf(a), Leaf(b)))),
        ]
        for e in exprs:
            assert evaluate(dualize(e)) == transpose(evaluate(e))
            assert evaluate(dualize(dualize(e))) == evaluate(e)

    def test_transpose_laws(self, leaves):
        a, b = leaves
        assert transpose(rc_product(a, b)) == cr_product(transpose(a), transpose(b))
        assert transpose(cr_product(a, b)) == rc_product(transpose(a), transpose(b))

    def test_depth_and_render(self):
        a = rational([[1]])
        e = Rc(Transpose(Leaf(a)), Sum(Leaf(a), Leaf(a)))
        assert depth(e) == 3
        assert render(e) == "rc(T([[1]]), sum([[1]], [[1]]))"


class TestCarrier:
    """Test the carriers matrices are built over"""

    def test_rationals_and_algebras_are_carriers(self):
        q = load_builtin("quaternion")
        assert isinstance(RATIONALS, Carrier)
        assert isinstance(q, Carrier)
        assert identity(2, q).carrier is q
        assert zeros(1, 1, q)[0, 0] == q.zero
