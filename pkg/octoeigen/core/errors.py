"""
Exception base class shared by every octoeigen module.
"""


class OctoEigenError(Exception):
    """Root of every error raised by octoeigen."""
