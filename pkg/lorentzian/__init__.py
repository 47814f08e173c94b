"""Exact Lorentzian and log-concavity testing plus clique reduction gadgets."""

__version__ = "0.1.0"
