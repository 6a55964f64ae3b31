"""
Black Swan Logic Toolkit

Machine-checks a first-order argument that events which occur but are
unimaginable must exist: a Hilbert-style proof kernel, exhaustive finite-model
scans and a desk-scale decision model with divergence.
"""

__version__ = "1.0.0"
__author__ = "Black Swan Logic Team"
__description__ = "Proof checking, finite-model scans and decision-map completeness for Black Swan events"
