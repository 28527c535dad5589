"""Exact machine checks for Hopf algebras, Galois descent and crossed products over Q."""

__version__ = "0.1.0"
