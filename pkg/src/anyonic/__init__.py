"""Anyonic (Z_n-graded braided) Hopf algebras and their braided Lie homology."""

__version__ = "0.1.0"
