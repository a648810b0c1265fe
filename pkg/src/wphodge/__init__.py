"""Exact Jacobian-ring computations for quasi-smooth weighted projective surfaces."""

__version__ = "0.1.0"
