"""Core algebra, solvers and checkers."""

from .errors import OctoEigenError

__all__ = ["OctoEigenError"]
