"""Finite median algebras.

Exact weights are exchanged with the extension as "p/q" strings; the helpers
here accept and return fractions.Fraction.
"""

from fractions import Fraction

from . import _medianlab
from ._medianlab import MedianAlgebra, MedianError, cubes, decompose, minimal, run, walls

__all__ = [
    "MedianAlgebra",
    "MedianError",
    "cubes",
    "decompose",
    "is_balanced",
    "minimal",
    "phi",
    "run",
    "stationary",
    "walls",
]


def _to_strings(weights):
    return [str(Fraction(w)) for w in weights]


def phi(algebra, weights):
    """Self-median operator on an exact probability vector."""
    return [Fraction(w) for w in _medianlab.phi(algebra, _to_strings(weights))]


def is_balanced(algebra, weights):
    return _medianlab.is_balanced(algebra, _to_strings(weights))


def stationary(algebra, action_json):
    """Vertices of the mu-stationary polytope; action_json holds generators and mu."""
    return [[Fraction(w) for w in v] for v in _medianlab.stationary(algebra, action_json)]
