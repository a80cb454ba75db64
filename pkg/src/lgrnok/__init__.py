"""Exact combinatorics of the co-rectangles seed for the Lagrangian
Grassmannian: plabic flows, Pluecker valuations, the superpotential
polytope, and the unimodular map identifying the two polytopes."""

__version__ = "0.1.0"
