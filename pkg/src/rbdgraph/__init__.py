"""Rational blowdown graphs of lens space fillings."""

__version__ = "0.1.0"
