"""scikit-learn style front ends.

``SelfDualCodeEnumerator`` is parameterised by (s, m, modulus) and
``fit`` builds the census. ``GrayMap`` is a stateless transformer from
ring words in [unit | u] layout to their Gray images, so it can sit in a
``Pipeline`` with anything that consumes field-valued feature rows.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import codes
from ._validation import check_field, check_s, check_word_array
from .graymap import gray_inverse_words, gray_words
from .ring import RingVector


class SelfDualCodeEnumerator(BaseEstimator):
    """Enumerate the self-dual cyclic codes of length 2^s over GF(2^m) + u GF(2^m).

    Parameters
    ----------
    s : int
        Length exponent.
    m : int
        Extension degree of the coefficient field.
    modulus : int, str or None
        Defining polynomial of GF(2^m) as a bit pattern (``0x7`` is
        x^2 + x + 1). ``None`` picks the smallest irreducible.
    cap : int or None
        Largest census that ``fit`` will materialise.

    Attributes
    ----------
    field_ : FieldSpec
    codes_ : list of CodeSpec
    n_codes_ : int
    family_counts_ : dict
    """

    def __init__(self, s=3, m=1, modulus=None, cap=codes.DEFAULT_CAP):
        self.s = s
        self.m = m
        self.modulus = modulus
        self.cap = cap

    def fit(self, X=None, y=None):
        s = check_s(self.s)
        self.field_ = check_field(self.m, self.modulus)
        self.codes_ = list(codes.enumerate_selfdual(s, self.field_, cap=self.cap))
        self.n_codes_ = len(self.codes_)
        self.family_counts_ = codes.count_by_family(s, self.field_.m)
        return self

    def count(self) -> int:
        """Closed-form count; does not need ``fit``."""
        return codes.count_selfdual(check_s(self.s), check_field(self.m, self.modulus).m)

    def generator_vectors(self):
        check_is_fitted(self, "codes_")
        return [c.generators() for c in self.codes_]

    def to_records(self) -> list[dict]:
        check_is_fitted(self, "codes_")
        return [c.to_json() for c in self.codes_]


class GrayMap(TransformerMixin, BaseEstimator):
    """Gray map on rows of ring words.

    Input rows have 2N columns: N unit parts followed by N u-parts, each a
    field element as an int. Output rows are (b, a + b).
    """

    def __init__(self, m=1, modulus=None):
        self.m = m
        self.modulus = modulus

    def fit(self, X=None, y=None):
        self.field_ = check_field(self.m, self.modulus)
        if X is not None:
            X = check_word_array(X, self.field_, even_width=True)
            self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "field_")
        if isinstance(X, RingVector):
            X = [X]
        if len(X) and isinstance(X[0], RingVector):
            X = np.array([v.a + v.b for v in X], dtype=np.int64)
        X = check_word_array(X, self.field_, even_width=True)
        return gray_words(X)

    def inverse_transform(self, X):
        check_is_fitted(self, "field_")
        X = check_word_array(X, self.field_, even_width=True)
        return gray_inverse_words(X)
