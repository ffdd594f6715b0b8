"""Unit tests for the maximal planar graph toolkit.

This module contains unit tests for individual components and services.
"""
