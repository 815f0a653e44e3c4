"""Sine-Gordon N=1 finite solutions in Jacobi elliptic and theta form."""

__version__ = "1.0.0"
