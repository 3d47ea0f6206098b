"""Exact polynomial-identity computations for group-graded algebras and their
Grassmann envelopes."""

__version__ = "0.1.0"
