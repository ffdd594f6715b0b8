"""Maximal planar graph coloring toolkit"""

__version__ = "0.1.0"
