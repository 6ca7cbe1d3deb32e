"""CLI package for octoeigen."""

__all__ = ["main"]
