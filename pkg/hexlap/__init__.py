"""Spectra, Kemeny's constant, Kf' and spanning trees of iterated hexagonal graphs."""
__version__ = "1.0.0"
