"""Exact covering towers, their deformations and resolutions."""

from fractions import Fraction

from ._core import UnicoverError, forward, gcd, normalize, resolve, verify
from ._core import curve as _curve

__all__ = ["UnicoverError", "curve", "forward", "gcd", "normalize", "resolve", "verify"]


def curve(branches, max_depth=64):
    """Resolve prod (y - phi_i(t)); each branch lists c_1, c_2, ... of phi_i."""
    return _curve([[str(Fraction(c)) for c in b] for b in branches], max_depth)
