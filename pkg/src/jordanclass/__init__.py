"""Exact computations with Jordan classes, sheets and log-like maps."""

__version__ = "0.1.0"
