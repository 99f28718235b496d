"""Exact symbolic verification workbench for cogroupoids and Hopf-Galois
objects built from matrix and cocycle data."""

__version__ = "0.1.0"
