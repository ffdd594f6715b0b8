"""Test package for the maximal planar graph toolkit."""
