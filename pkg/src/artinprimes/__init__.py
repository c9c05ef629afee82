"""Artin primes produced by polynomials."""

__version__ = "0.1.0"
