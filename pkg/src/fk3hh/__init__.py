"""Exact-arithmetic Hochschild (co)homology engine for the Fomin-Kirillov algebra FK(3)."""

__version__ = "0.1.0"
