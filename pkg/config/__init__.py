"""Configuration files for the planar graph toolkit."""
