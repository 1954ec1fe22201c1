"""
ncmod - modules over noncommutative algebras
Exact kernel for structural-constant algebras, biring matrices, A-modules,
module homomorphisms and noncommutative differentiation
"""

__version__ = "1.0.0"
__author__ = "ncmod Team"
