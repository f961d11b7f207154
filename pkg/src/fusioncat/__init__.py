"""Fusion categories A_k(G): Weyl denominators, superfactorials, global dimensions."""

__version__ = "0.1.0"
