"""Exact one-term Yang-Baxter homology for the sl_m operators R_m over Q(y)."""

__version__ = "0.1.0"
