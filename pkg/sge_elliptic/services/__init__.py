"""Numerical services: elliptic functions, transforms, solutions and bridges."""
