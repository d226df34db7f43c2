"""Counting factorizations of Coxeter elements into reflections."""

__version__ = "0.1.0"
