"""Exact arithmetic for one-parameter generalized binomial coefficients."""

from .kernels import BACKEND
from .numeric import Rational, binom_rational
from .polyalg import PolyT, PolyXT, BinomialExpansion, InexactDivision, exact_divide
from .series import TruncSeries, series_G, series_H
from .genbinom import genbinom_symbolic, genbinom_at, genbinom_minus_one, diagonal

__version__ = "0.1.0"
