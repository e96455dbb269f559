"""Conformal range, Davis-Wielandt shell and numerical range of 2x2 complex matrices.

Matrices are given as inline strings ("1i,2;0,-1i"), JSON documents, or any
2x2 array-like of complex numbers. Descriptors come back as dicts with the
same layout as the command line tool.
"""

import json

import numpy as np

from ._shellrange import Error, ModelDimensionMismatch, NonFiniteEntry, ParseError
from . import _shellrange as _core

__all__ = [
    "Error",
    "ModelDimensionMismatch",
    "NonFiniteEntry",
    "ParseError",
    "classify",
    "conformal_range",
    "numerical_range",
    "parse",
    "sample",
    "shell",
    "verify",
]


def parse(text):
    return _core.parse(text)


def _matrix(a):
    if isinstance(a, str):
        return _core.parse(a)
    m = np.asarray(a, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    return m


def classify(a):
    return json.loads(_core.classify(_matrix(a)))


def conformal_range(a, model="bck"):
    return json.loads(_core.range(_matrix(a), model))


def shell(a, model="bck"):
    return json.loads(_core.shell(_matrix(a), model))


def numerical_range(a):
    return json.loads(_core.nr(_matrix(a)))


def verify(a, model="bck", samples=100000, seed=0, tolerance=1e-8):
    return json.loads(_core.verify(_matrix(a), model, samples, seed, tolerance))


def sample(a, target="range", model="bck", n=10000, seed=0):
    """Sampled points as an array: (n, 3) for range and shell, (n, 2) of (Re, Im) for nr."""
    return _core.sample(_matrix(a), target, model, n, seed)
