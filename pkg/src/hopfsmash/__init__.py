"""Exact-arithmetic workbench for quasi-triangular Hopf algebras, quantum
commutative module algebras, smash products with weak Hopf structure, and
R-adjoint-stable algebras."""

__version__ = "0.1.0"
