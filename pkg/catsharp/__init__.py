"""Polynomial functors, categories as comonoids, familial monads, theory
categories and nerves, computed on finite data up to a degree bound."""

__version__ = "0.1.0"
