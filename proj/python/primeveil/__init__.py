"""Gcd-obstruction certificates and prime search for positive bivariate
polynomials without constant terms."""

from ._primeveil import *  # noqa: F401,F403
from ._primeveil import __version__  # noqa: F401
