"""Exact engine for graded Hecke algebras: standard modules from multisegments,
Dirac operators on X (x) S, Dirac cohomology and index as spin-Weyl-group
representations, and sweep-based verification of the vanishing, ladder and
multiplicity-one statements."""

__version__ = "0.1.0"
