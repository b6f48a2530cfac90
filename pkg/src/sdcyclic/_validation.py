"""Argument checks shared by the estimators and the CLI."""

from __future__ import annotations

import numbers

import numpy as np

from .gf2m import MAX_DEGREE, FieldSpec, field_new


def check_s(s) -> int:
    if not isinstance(s, numbers.Integral) or isinstance(s, bool) or s < 1:
        raise ValueError(f"s must be a positive integer, got {s!r}")
    return int(s)


def check_m(m) -> int:
    if not isinstance(m, numbers.Integral) or isinstance(m, bool) or not 1 <= m <= MAX_DEGREE:
        raise ValueError(f"m must be an integer in 1..{MAX_DEGREE}, got {m!r}")
    return int(m)


def check_field(m, modulus=None) -> FieldSpec:
    m = check_m(m)
    if isinstance(modulus, str):
        modulus = int(modulus, 16)
    return field_new(m, modulus)


def check_word_array(X, field: FieldSpec, *, even_width: bool = False) -> np.ndarray:
    """2-D integer array whose entries are reduced elements of ``field``."""
    X = np.asarray(X)
    if X.ndim == 1:
        X = X[None, :]
    if X.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {X.shape}")
    if X.size and not np.issubdtype(X.dtype, np.integer):
        raise ValueError(f"expected integer entries, got dtype {X.dtype}")
    X = X.astype(np.int64)
    if X.size and (X.min() < 0 or X.max() >= field.order):
        raise ValueError(f"entries must lie in 0..{field.order - 1}")
    if even_width and X.shape[1] % 2:
        raise ValueError(f"expected an even number of columns, got {X.shape[1]}")
    return X
