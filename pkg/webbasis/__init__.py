"""Exact web bases of mixed tensor powers for quantum gl(n)."""
__version__ = "0.1.1"
