"""Constructive engine and verifier for antimagic orientations of graphs."""

__version__ = "0.1.0"
