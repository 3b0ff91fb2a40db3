"""Finite simplicial-set models of barycenter spaces and their homology."""
__version__ = "0.1.0"
