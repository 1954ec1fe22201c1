"""
Tests for loading and saving JSON documents
"""

import json

import pytest

from ncmod.core.algebra import load_builtin
from ncmod.core.amodule import Orientation
from ncmod.core.exceptions import MalformedInputError, UnknownNameError
from ncmod.models.files import AlgebraFile, HomFile, MatrixFile
from ncmod.services.file_service import FileService


def write(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


class TestFileService:
    """Test FileService conversions"""

    @pytest.fixture
    def service(self):
        return FileService()

    @pytest.fixture
    def dual_numbers(self, tmp_path):
        return write(
            tmp_path / "dual.json",
            {
                "name": "dual",
                "dim": 2,
                "basis": ["1", "eps"],
                "unit": 0,
                "constants": [
                    {"i": 0, "j": 0, "k": 0, "c": "1"},
                    {"i": 0, "j": 1, "k": 1, "c": "1"},
                    {"i": 1, "j": 0, "k": 1, "c": "1"},
                ],
            },
        )

    def test_load_algebra(self, service, dual_numbers):
        algebra = service.load_algebra(dual_numbers)
        assert algebra.name == "dual"
        eps = algebra.basis_element(1)
        assert (eps * eps).is_zero()
        assert service.resolve_algebra("dual") is algebra
        assert service.resolve_algebra(str(dual_numbers)) is algebra

    def test_algebra_round_trip(self, service, tmp_path):
        quaternion = load_builtin("quaternion")
        path = tmp_path / "q.json"
        service.save(service.algebra_to_file(quaternion), path)
        loaded = service.load_algebra(path)
        assert loaded.constants == quaternion.constants
        assert loaded.unit_index == 0

    def test_resolve_builtin_and_unknown(self, service):
        assert service.resolve_algebra("complex").dim == 2
        with pytest.raises(UnknownNameError):
            service.resolve_algebra("sedenion")

    @pytest.mark.parametrize(
        "payload",
        [
            {"name": "x", "dim": 1, "basis": ["a", "b"], "constants": []},
            {"name": "x", "dim": 1, "basis": ["a"], "constants": [{"i": 0, "j": 0, "k": 1, "c": "1"}]},
            {"name": "x", "dim": 1, "basis": ["a"], "constants": [{"i": 0, "j": 0, "k": 0, "c": "2/4"}]},
            {"name": "x", "dim": 2, "basis": ["a", "b"], "unit": 0, "constants": []},
        ],
    )
    def test_malformed_algebra(self, service, tmp_path, payload):
        with pytest.raises(MalformedInputError):
            service.load_algebra(write(tmp_path / "bad.json", payload))

    def test_unreadable_file(self, service, tmp_path):
        with pytest.raises(MalformedInputError):
            service.load_matrix(tmp_path / "missing.json")
        broken = tmp_path / "broken.json"
        broken.write_text("{not json", encoding="utf-8")
        with pytest.raises(MalformedInputError):
            service.load_matrix(broken)

    def test_matrices(self, service, tmp_path):
        rational = service.load_matrix(
            write(tmp_path / "r.json", {"rows": 1, "cols": 2, "algebra": None, "entries": [["1/2", "-3"]]})
        )
        assert rational.shape == (1, 2)
        quaternion = service.load_matrix(
            write(
                tmp_path / "q.json",
                {"rows": 1, "cols": 1, "algebra": "quaternion", "entries": [["0,1,0,0"]]},
            )
        )
        assert quaternion[0, 0] == load_builtin("quaternion").basis_element(1)
        assert service.matrix_to_file(quaternion).entries == [["0,1,0,0"]]
        assert service.matrix_to_file(rational).algebra is None

    def test_matrix_shape_validated(self):
        with pytest.raises(ValueError):
            MatrixFile(rows=2, cols=1, algebra=None, entries=[["1"]])
        with pytest.raises(ValueError):
            MatrixFile(rows=1, cols=1, algebra=None, entries=[["1,0"]])

    def test_wrong_coordinate_count(self, service, tmp_path):
        path = write(
            tmp_path / "v.json",
            {"algebra": "quaternion", "orientation": "left-column", "vectors": [["1,0"]]},
        )
        with pytest.raises(MalformedInputError):
            service.load_vectors(path)

    def test_vectors_and_basis(self, service, tmp_path):
        path = write(
            tmp_path / "b.json",
            {
                "algebra": "quaternion",
                "orientation": "right-row",
                "vectors": [["1,0,0,0", "0,0,0,0"], ["0,1,0,0", "1,0,0,0"]],
            },
        )
        basis = service.load_basis(path)
        assert basis.orientation is Orientation.RIGHT_ROW
        assert len(basis) == 2
        document = service.vectors_to_file(list(basis.vectors))
        assert document.vectors[1] == ["0,1,0,0", "1,0,0,0"]

    def test_bad_orientation(self, service, tmp_path):
        path = write(
            tmp_path / "v.json",
            {"algebra": "quaternion", "orientation": "up-column", "vectors": [["1,0,0,0"]]},
        )
        with pytest.raises(MalformedInputError):
            service.load_vectors(path)

    def test_hom_with_algebra_homomorphism(self, service, tmp_path):
        path = write(
            tmp_path / "h.json",
            {
                "algebra": "quaternion",
                "orientation": "left-column",
                "matrix": [["0,0,1,0"]],
                "alg_hom": [["1", "0"], ["0", "1"], ["0", "0"], ["0", "0"]],
                "source_algebra": "complex",
            },
        )
        h = service.load_hom(path)
        assert h.domain_algebra.name == "complex"
        document = service.hom_to_file(h)
        assert document.source_algebra == "complex"
        assert document.alg_hom[1] == ["0", "1"]

    def test_hom_rejects_non_homomorphism(self, service, tmp_path):
        path = write(
            tmp_path / "h.json",
            {
                "algebra": "quaternion",
                "orientation": "left-column",
                "matrix": [["0,0,1,0"]],
                "alg_hom": [["0", "0"], ["1", "0"], ["0", "1"], ["0", "0"]],
                "source_algebra": "complex",
            },
        )
        with pytest.raises(MalformedInputError):
            service.load_hom(path)

    def test_alg_hom_needs_source(self):
        with pytest.raises(ValueError):
            HomFile(
                algebra="quaternion",
                orientation="left-column",
                matrix=[["1,0,0,0"]],
                alg_hom=[["1"]],
            )

    def test_basis_length_matches_dim(self):
        with pytest.raises(ValueError):
            AlgebraFile(name="x", dim=1, basis=["a", "b"])
