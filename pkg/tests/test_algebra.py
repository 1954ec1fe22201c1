"""
Tests for algebras given by structural constants
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncmod.core.algebra import (
    BUILTIN_NAMES,
    Algebra,
    associator,
    check_algebra_hom,
    classify,
    commutator,
    embed_in_extension,
    left_regular,
    load_builtin,
    map_element,
    mul,
    multiplication_table,
    right_regular,
    unital_extension,
)
from ncmod.core.exact import DMatrix
from ncmod.core.exceptions import (
    AlgebraMismatchError,
    DimensionMismatchError,
    InvalidAlgebraError,
    UnknownNameError,
)

small = st.fractions(max_denominator=5).filter(lambda f: abs(f) <= 5)


def quaternions():
    return st.lists(small, min_size=4, max_size=4).map(load_builtin("quaternion").element)


def octonions():
    return st.lists(small, min_size=8, max_size=8).map(load_builtin("octonion").element)


class TestBuiltins:
    """Test the built-in algebra catalogue"""

    def test_catalogue(self):
        dims = {name: load_builtin(name).dim for name in BUILTIN_NAMES}
        assert dims == {
            "rational": 1,
            "complex": 2,
            "quaternion": 4,
            "octonion": 8,
            "matrix2": 4,
            "zero1": 1,
        }

    def test_unknown_name(self):
        with pytest.raises(UnknownNameError) as exc:
            load_builtin("sedenion")
        assert "sedenion" in str(exc.value)

    def test_quaternion_relations(self, quaternion):
        one, i, j, k = quaternion.basis()
        assert i * i == -one
        assert j * j == -one
        assert k * k == -one
        assert i * j == k
        assert j * i == -k
        assert j * k == i
        assert k * i == j

    def test_complex_square(self, complex_alg):
        one, i = complex_alg.basis()
        assert i * i == -one

    def test_matrix_units(self, matrix2):
        e11, e12, e21, e22 = matrix2.basis()
        assert e12 * e21 == e11
        assert e21 * e12 == e22
        assert (e12 * e12).is_zero()
        assert matrix2.unit == e11 + e22

    def test_zero1_has_no_unit(self, zero1):
        assert zero1.unit is None
        with pytest.raises(InvalidAlgebraError):
            zero1.one
        e = zero1.basis_element(0)
        assert (e * e).is_zero()


class TestConstruction:
    """Test validation of structural constants"""

    def test_index_out_of_range(self):
        with pytest.raises(InvalidAlgebraError):
            Algebra.from_entries("bad", ["a"], [(0, 0, 1, 1)])

    def test_duplicate_entry(self):
        with pytest.raises(InvalidAlgebraError):
            Algebra.from_entries("bad", ["a"], [(0, 0, 0, 1), (0, 0, 0, 2)])

    def test_repeated_label(self):
        with pytest.raises(InvalidAlgebraError):
            Algebra.from_entries("bad", ["a", "a"], [])

    def test_false_unit_rejected(self):
        with pytest.raises(InvalidAlgebraError):
            Algebra.from_entries("bad", ["a", "b"], [(0, 0, 0, 1)], unit_index=0)

    def test_entries_are_sparse(self, complex_alg):
        assert sorted(complex_alg.entries()) == [
            (0, 0, 0, Fraction(1)),
            (0, 1, 1, Fraction(1)),
            (1, 0, 1, Fraction(1)),
            (1, 1, 0, Fraction(-1)),
        ]


class TestElements:
    """Test element arithmetic and formatting"""

    def test_parse_and_format(self, quaternion):
        a = quaternion.parse_element("1,2,0,-1/2")
        assert a.coords == (Fraction(1), Fraction(2), Fraction(0), Fraction(-1, 2))
        assert a.to_coord_string() == "1,2,0,-1/2"
        assert str(a) == "1 + 2*i - 1/2*k"
        assert str(quaternion.zero) == "0"

    def test_parse_wrong_length(self, quaternion):
        with pytest.raises(DimensionMismatchError):
            quaternion.parse_element("1,2")

    def test_mixing_algebras(self, quaternion, complex_alg):
        with pytest.raises(AlgebraMismatchError):
            quaternion.one + complex_alg.one

    def test_rational_scaling(self, quaternion):
        i = quaternion.basis_element(1)
        assert 3 * i == i.scale(3)
        assert i * Fraction(1, 2) == i.scale(Fraction(1, 2))

    def test_repr_omits_table(self, octonion):
        text = repr(octonion.basis_element(3))
        assert text.startswith("AlgElem(coords=")
        assert "octonion" not in text
        assert "table" not in text

    def test_commutator_and_associator(self, quaternion, octonion):
        _, i, j, k = quaternion.basis()
        assert commutator(i, j) == k.scale(2)
        assert associator(i, j, k).is_zero()
        e = octonion.basis()
        assert not all(
            associator(e[a], e[b], e[c]).is_zero()
            for a in range(1, 8)
            for b in range(1, 8)
            for c in range(1, 8)
        )

    @given(quaternions(), quaternions(), quaternions())
    def test_quaternion_associative(self, a, b, c):
        assert associator(a, b, c).is_zero()

    @given(octonions(), octonions())
    def test_octonion_alternative(self, a, b):
        assert associator(a, a, b).is_zero()
        assert associator(a, b, b).is_zero()

    @given(quaternions(), quaternions(), quaternions())
    def test_distributive(self, a, b, c):
        assert mul(a, b + c) == mul(a, b) + mul(a, c)
        assert mul(a + b, c) == mul(a, c) + mul(b, c)


class TestClassification:
    """Test structural flags"""

    @pytest.mark.parametrize(
        "name,commutative,associative,nucleus,center,unit",
        [
            ("rational", True, True, 1, 1, True),
            ("complex", True, True, 2, 2, True),
            ("quaternion", False, True, 4, 1, True),
            ("matrix2", False, True, 4, 1, True),
            ("octonion", False, False, 1, 1, True),
            ("zero1", True, True, 1, 1, False),
        ],
    )
    def test_builtin_flags(self, name, commutative, associative, nucleus, center, unit):
        flags = classify(load_builtin(name))
        assert flags.commutative is commutative
        assert flags.associative is associative
        assert flags.nucleus_dim == nucleus
        assert flags.center_dim == center
        assert flags.has_unit is unit
        assert set(flags.as_dict()) == {
            "commutative",
            "associative",
            "nucleus_dim",
            "center_dim",
            "has_unit",
        }

    def test_nonassociative_triples(self, quaternion, octonion):
        assert list(quaternion.nonassociative_triples()) == []
        assert next(octonion.nonassociative_triples(), None) is not None

    def test_multiplication_table(self, complex_alg):
        assert multiplication_table(complex_alg) == [["1", "i"], ["i", "-1"]]


class TestUnitalExtension:
    """Test adjoining a unit"""

    def test_unital_algebra_unchanged(self, quaternion):
        assert unital_extension(quaternion) is quaternion

    def test_zero1_extension(self, zero1):
        ext = unital_extension(zero1)
        assert ext.name == "zero1(1)"
        assert ext.dim == 2
        assert ext.unit == ext.basis_element(1)
        eps = embed_in_extension(zero1.basis_element(0), ext)
        assert (eps * eps).is_zero()
        assert ext.one * eps == eps
        assert eps * ext.one == eps

    def test_image_is_ideal(self, zero1):
        ext = unital_extension(zero1)
        eps = embed_in_extension(zero1.basis_element(0), ext)
        for x in ext.basis():
            assert (x * eps).coords[1] == 0
            assert (eps * x).coords[1] == 0

    def test_adjoined_label_is_fresh(self):
        alg = Algebra.from_entries("nil3", ["1", "u", "u1"], [(0, 1, 2, 1)])
        assert alg.unit is None
        ext = unital_extension(alg)
        assert ext.basis_labels == ("1", "u", "u1", "u2")
        assert ext.unit == ext.basis_element(3)


class TestLinearMaps:
    """Test regular representations and algebra homomorphisms"""

    @given(quaternions(), quaternions())
    def test_regular_representations(self, a, x):
        assert left_regular(a).apply(x.coords) == (a * x).coords
        assert right_regular(a).apply(x.coords) == (x * a).coords

    def test_complex_into_quaternion(self, complex_alg, quaternion):
        f = DMatrix.from_rows([[1, 0], [0, 1], [0, 0], [0, 0]])
        assert check_algebra_hom(f, complex_alg, quaternion)
        image = map_element(f, complex_alg.parse_element("2,3"), quaternion)
        assert image.to_coord_string() == "2,3,0,0"

    def test_non_homomorphism(self, complex_alg, quaternion):
        f = DMatrix.from_rows([[0, 0], [1, 0], [0, 1], [0, 0]])
        assert not check_algebra_hom(f, complex_alg, quaternion)

    def test_hom_shape_checked(self, complex_alg, quaternion):
        with pytest.raises(DimensionMismatchError):
            check_algebra_hom(DMatrix.identity(2), complex_alg, quaternion)
