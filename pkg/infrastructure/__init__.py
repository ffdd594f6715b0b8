"""Infrastructure package for external dependencies and implementations."""

# Infrastructure package initialization
__version__ = "1.0.0"