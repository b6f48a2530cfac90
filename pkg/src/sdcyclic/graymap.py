"""Gray map R^N -> GF(2^m)^(2N), a + bu -> (b, a + b), and weight statistics.

Images use the block layout (b_0 .. b_{N-1}, a_0+b_0 .. a_{N-1}+b_{N-1}).
In that layout the cyclic shift on R^N becomes a simultaneous rotation of
both halves by one place. ``interleave_permutation`` reorders a block
word into (b_0, a_0+b_0, b_1, a_1+b_1, ...), where the same symmetry is
the plain shift by two coordinates.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .gf2m import FieldSpec
from .oracle import ORACLE_CAP, CodewordSet, WordSet, rank, row_reduce
from .exceptions import CapExceeded
from .ring import RingVector


class FieldCode(WordSet):
    """Set of words over GF(2^m) (typically a Gray image)."""

    @property
    def length(self) -> int:
        return self.width

    def __iter__(self):
        for w in self.words:
            yield tuple(int(v) for v in w)

    def __contains__(self, w) -> bool:
        return self._contains_word(w)


@dataclass(frozen=True)
class WeightDistribution:
    counts: Mapping[int, int] = field(default_factory=dict)

    @classmethod
    def from_weights(cls, weights) -> WeightDistribution:
        return cls(dict(sorted(Counter(int(w) for w in weights).items())))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def min_distance(self) -> int | None:
        nonzero = [w for w, c in self.counts.items() if w and c]
        return min(nonzero) if nonzero else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        strip = lambda d: {w: c for w, c in d.items() if c}  # noqa: E731
        return strip(self.counts) == strip(other.counts)

    def __hash__(self):
        return hash(tuple(sorted(self.counts.items())))

    def to_csv(self) -> str:
        lines = ["weight,count"] + [f"{w},{c}" for w, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"


def gray_word(v: RingVector) -> tuple[int, ...]:
    return tuple(v.b) + tuple(a ^ b for a, b in zip(v.a, v.b))


def gray_words(words: np.ndarray) -> np.ndarray:
    """Vectorised Gray map on rows in [unit | u] layout."""
    words = np.asarray(words, dtype=np.int64)
    n = words.shape[1] // 2
    a, b = words[:, :n], words[:, n:]
    return np.concatenate([b, a ^ b], axis=1)


def gray_inverse_words(words: np.ndarray) -> np.ndarray:
    """Rows (b | a+b) back to [unit | u] layout."""
    words = np.asarray(words, dtype=np.int64)
    n = words.shape[1] // 2
    b, ab = words[:, :n], words[:, n:]
    return np.concatenate([ab ^ b, b], axis=1)


def gray_image(cs: CodewordSet, cap: int = ORACLE_CAP) -> FieldCode:
    if len(cs) > cap:
        raise CapExceeded(f"{len(cs)} codewords exceeds the cap {cap}")
    return FieldCode(cs.field, gray_words(cs.words))


def lee_distribution(cs: CodewordSet) -> WeightDistribution:
    n = cs.length
    a, b = cs.words[:, :n], cs.words[:, n:]
    return WeightDistribution.from_weights(np.count_nonzero(b, axis=1) + np.count_nonzero(a ^ b, axis=1))


def hamming_distribution(image: WordSet) -> WeightDistribution:
    return WeightDistribution.from_weights(np.count_nonzero(image.words, axis=1))


def interleave_permutation(n: int) -> np.ndarray:
    """perm with interleaved[j] = block[perm[j]] for images of length 2n."""
    perm = np.empty(2 * n, dtype=np.int64)
    perm[0::2] = np.arange(n)
    perm[1::2] = np.arange(n, 2 * n)
    return perm


def interleave(image: WordSet) -> FieldCode:
    return FieldCode(image.field, image.words[:, interleave_permutation(image.width // 2)])


def block_rotation(n: int) -> np.ndarray:
    """Coordinate permutation rotating each length-n half by one place."""
    idx = np.arange(n)
    rot = (idx - 1) % n
    return np.concatenate([rot, n + rot])


def is_2_quasi_cyclic(image: WordSet, layout: str = "block") -> bool:
    """Invariance under the image of the cyclic shift.

    ``layout="block"`` rotates both halves by one; ``layout="interleaved"``
    treats the words as already interleaved and shifts by two.
    """
    width = image.width
    if width % 2:
        return False
    if layout == "block":
        perm = block_rotation(width // 2)
    elif layout == "interleaved":
        perm = (np.arange(width) - 2) % width
    else:
        raise ValueError(f"unknown layout {layout!r}")
    return FieldCode(image.field, image.words[:, perm]) == FieldCode(image.field, image.words)


def is_self_dual_field(image: WordSet) -> bool:
    """Linear, self-orthogonal under the standard dot product, and |C|^2 = q^len."""
    F: FieldSpec = image.field
    if not image.is_linear():
        return False
    if len(image) ** 2 != F.order**image.width:
        return False
    basis = row_reduce(F, image.words)
    if len(basis) == 0:
        return image.width == 0
    dots = np.bitwise_xor.reduce(F.mul_array(basis[:, None, :], basis[None, :, :]), axis=2)
    return not dots.any()


def field_rank(image: WordSet) -> int:
    return rank(image.field, image.words)
