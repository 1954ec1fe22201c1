#!/usr/bin/env python3
"""
Create sample input files for trying out the ncmod command line
"""
import sys
from pathlib import Path

# Add the project root to the path
sys.path.insert(0, str(Path(__file__).parent.parent))

from ncmod.core.algebra import Algebra
from ncmod.models.files import HomFile, MatrixFile, VectorFile
from ncmod.services.file_service import FileService
from ncmod.utils.logging import setup_logging


def create_sample_files(target: str = "sample_data"):
    """Write a small algebra, matrices, a basis, vectors and homomorphisms"""

    sample_dir = Path(target)
    sample_dir.mkdir(exist_ok=True)
    files = FileService()

    # Dual numbers Q[eps]/(eps^2)
    dual = Algebra.from_entries(
        "dual",
        ["1", "eps"],
        [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        unit_index=0,
    )
    files.save(files.algebra_to_file(dual), sample_dir / "dual.json")

    # Quaternion matrices for mat --op rc/cr
    files.save(
        MatrixFile(rows=1, cols=2, algebra="quaternion", entries=[["0,1,0,0", "0,0,1,0"]]),
        sample_dir / "row.json",
    )
    files.save(
        MatrixFile(rows=2, cols=1, algebra="quaternion", entries=[["0,0,1,0"], ["0,0,0,1"]]),
        sample_dir / "column.json",
    )

    # A basis of the left module H^2 and a vector to express in it
    files.save(
        VectorFile(
            algebra="quaternion",
            orientation="left-column",
            vectors=[["1,0,0,0", "0,0,0,0"], ["0,1,0,0", "1,0,0,0"]],
        ),
        sample_dir / "basis.json",
    )
    files.save(
        VectorFile(algebra="quaternion", orientation="left-column", vectors=[["0,0,2,0", "0,0,0,1"]]),
        sample_dir / "vector.json",
    )

    # Homomorphisms of the right module H
    files.save(
        HomFile(algebra="quaternion", orientation="right-column", matrix=[["0,1,0,0"]]),
        sample_dir / "g.json",
    )
    files.save(
        HomFile(algebra="quaternion", orientation="right-column", matrix=[["0,0,1,0"]]),
        sample_dir / "h.json",
    )

    print(f"Sample files written to {sample_dir.resolve()}")
    print("Try:")
    print(f"  python -m ncmod coords --vector {sample_dir}/vector.json --basis {sample_dir}/basis.json")
    print(f"  python -m ncmod mat --op rc {sample_dir}/row.json {sample_dir}/column.json")
    print(f"  python -m ncmod hom compose {sample_dir}/h.json {sample_dir}/g.json")
    print(f"  python -m ncmod algebra show {sample_dir}/dual.json")


if __name__ == "__main__":
    setup_logging()
    create_sample_files(sys.argv[1] if len(sys.argv) > 1 else "sample_data")
