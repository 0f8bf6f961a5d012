# SPDX-License-Identifier: Apache-2.0
"""Exact planar polynomial vector fields with polynomial first integrals."""

from ._pfint import *  # noqa: F401,F403
from ._pfint import BiPoly, Error, ParseError, VectorField  # noqa: F401

__version__ = "0.1.0"
