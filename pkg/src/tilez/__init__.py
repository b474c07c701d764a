"""Translational tilings of Z^2 by a finite tile: decide, certify, periodize."""

__version__ = "0.1.0"
