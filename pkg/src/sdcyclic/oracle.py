"""Brute-force checks that do not rely on the classification.

A vector over R of length N is handled as a length-2N vector over
GF(2^m) laid out as [unit parts | u-parts]. The R-span of a set V equals
the GF(2^m)-span of V together with u*V, so every code here reduces to
ordinary linear algebra over the field.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Sequence

import numpy as np

from .codes import DEFAULT_CAP, CodeSpec, Family, enumerate_all_cyclic
from .exceptions import CapExceeded, CardinalityMismatch, LengthMismatch
from .gf2m import FieldSpec
from .ring import RingVector, cyclic_shift

ORACLE_CAP = int(os.environ.get("SDCYCLIC_ORACLE_CAP", 1 << 24))


def _check_cap(q: int, log_size: int, cap: int) -> None:
    if q**log_size > cap:
        raise CapExceeded(f"{q}^{log_size} words exceeds the cap {cap}")


# linear algebra over GF(2^m) on int arrays


def row_reduce(field: FieldSpec, rows) -> np.ndarray:
    """Reduced row echelon form with zero rows dropped."""
    M = np.array(rows, dtype=np.int64, copy=True)
    if M.ndim != 2:
        M = M.reshape(-1, M.shape[-1] if M.ndim else 0)
    nrows, ncols = M.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        lead = int(M[r, col])
        if lead != 1:
            M[r] = field.mul_array(M[r], field.inv(lead))
        factors = M[:, col].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            M[hit] ^= field.mul_array(factors[hit, None], M[r][None, :])
        r += 1
    return M[:r]


def rank(field: FieldSpec, rows) -> int:
    return len(row_reduce(field, rows))


def span_words(field: FieldSpec, basis: np.ndarray) -> np.ndarray:
    """Every GF(2^m)-combination of the basis rows."""
    basis = np.asarray(basis, dtype=np.int64)
    width = basis.shape[1] if basis.ndim == 2 else 0
    words = np.zeros((1, width), dtype=np.int64)
    scalars = np.arange(field.order, dtype=np.int64)
    for row in basis:
        multiples = field.mul_array(scalars[:, None], row[None, :])
        words = (words[None, :, :] ^ multiples[:, None, :]).reshape(-1, width)
    return words


def _canonical(words: np.ndarray) -> np.ndarray:
    if len(words) == 0:
        return words
    return np.unique(words, axis=0)


# codeword sets


class WordSet:
    """Sorted, duplicate-free set of equal-length words over GF(2^m)."""

    def __init__(self, field: FieldSpec, words: np.ndarray, *, canonical: bool = False):
        words = np.asarray(words, dtype=np.int64)
        self.field = field
        self.words = words if canonical else _canonical(words)

    @property
    def width(self) -> int:
        return self.words.shape[1]

    def __len__(self) -> int:
        return len(self.words)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordSet):
            return NotImplemented
        return (
            type(self) is type(other)
            and self.field == other.field
            and self.words.shape == other.words.shape
            and bool(np.array_equal(self.words, other.words))
        )

    __hash__ = None

    def packed(self) -> frozenset[bytes]:
        return frozenset(w.tobytes() for w in self.words.astype(np.uint16))

    def _contains_word(self, w: Sequence[int]) -> bool:
        w = np.asarray(w, dtype=np.int64)
        return bool(np.any(np.all(self.words == w[None, :], axis=1)))

    def is_linear(self) -> bool:
        """Closed under GF(2^m)-linear combinations."""
        r = rank(self.field, self.words) if len(self.words) else 0
        return len(self) == self.field.order**r


class CodewordSet(WordSet):
    """Codewords over R of length N, stored in [unit | u] layout."""

    @property
    def length(self) -> int:
        return self.width // 2

    def __iter__(self) -> Iterator[RingVector]:
        n = self.length
        for w in self.words:
            yield RingVector(self.field, w[:n], w[n:])

    def __contains__(self, v: RingVector) -> bool:
        if len(v) != self.length:
            raise LengthMismatch(f"vector of length {len(v)} in a length-{self.length} code")
        return self._contains_word(v.a + v.b)

    def unit_parts(self) -> np.ndarray:
        return self.words[:, : self.length]

    def u_parts(self) -> np.ndarray:
        return self.words[:, self.length :]

    def log_size(self) -> int:
        q, size, e = self.field.order, len(self), 0
        while size > 1 and size % q == 0:
            size //= q
            e += 1
        if size != 1:
            raise CardinalityMismatch(f"{len(self)} is not a power of {q}")
        return e

    def is_closed(self) -> bool:
        """Closed under addition, multiplication by R, and the cyclic shift."""
        if not self.is_linear():
            return False
        n = self.length
        basis = row_reduce(self.field, self.words)
        mine = self.packed()
        # u * (a | b) = (0 | a); shift rotates both halves
        u_times = np.concatenate([np.zeros_like(basis[:, :n]), basis[:, :n]], axis=1)
        rot = np.concatenate([np.roll(basis[:, :n], 1, axis=1), np.roll(basis[:, n:], 1, axis=1)], axis=1)
        for w in np.concatenate([u_times, rot]):
            if w.astype(np.uint16).tobytes() not in mine:
                return False
        return True


def ring_rows(vectors: Iterable[RingVector]) -> np.ndarray:
    rows = [v.a + v.b for v in vectors]
    return np.array(rows, dtype=np.int64)


def _with_u_multiples(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1] // 2
    u_rows = np.concatenate([np.zeros_like(rows[:, :n]), rows[:, :n]], axis=1)
    return np.concatenate([rows, u_rows])


# per-code oracles


def shift_basis(c: CodeSpec) -> list[RingVector]:
    """All cyclic shifts of every generator."""
    out = []
    for g in c.generators():
        out.extend(cyclic_shift(g, i) for i in range(len(g)))
    return out


def span_basis(c: CodeSpec) -> np.ndarray:
    """Reduced GF(2^m)-basis of the code; a canonical key for the code."""
    return row_reduce(c.field, _with_u_multiples(ring_rows(shift_basis(c))))


def code_log_size(c: CodeSpec) -> int:
    """log_{2^m} |C| computed from the span, not from the generator shape."""
    return len(span_basis(c))


def expand(c: CodeSpec, cap: int = ORACLE_CAP) -> CodewordSet:
    basis = span_basis(c)
    expected = c.expected_log_size()
    if len(basis) != expected:
        raise CardinalityMismatch(
            f"{c.describe()}: span has q^{len(basis)} words, shape predicts q^{expected}"
        )
    _check_cap(c.field.order, len(basis), cap)
    return CodewordSet(c.field, span_words(c.field, basis))


def span_of(field: FieldSpec, vectors: Sequence[RingVector], cap: int = ORACLE_CAP) -> CodewordSet:
    """R-span of arbitrary vectors (no cyclic closure)."""
    basis = row_reduce(field, _with_u_multiples(ring_rows(vectors)))
    _check_cap(field.order, len(basis), cap)
    return CodewordSet(field, span_words(field, basis))


def _gram(field: FieldSpec, rows: np.ndarray, cols: np.ndarray | None = None):
    """Unit and u parts of all pairwise R inner products."""
    cols = rows if cols is None else cols
    n = rows.shape[1] // 2
    A, B = rows[:, :n], rows[:, n:]
    C, D = cols[:, :n], cols[:, n:]
    unit = np.bitwise_xor.reduce(field.mul_array(A[:, None, :], C[None, :, :]), axis=2)
    upart = np.bitwise_xor.reduce(
        field.mul_array(A[:, None, :], D[None, :, :]) ^ field.mul_array(B[:, None, :], C[None, :, :]),
        axis=2,
    )
    return unit, upart


def is_self_orthogonal(c: CodeSpec) -> bool:
    rows = ring_rows(shift_basis(c))
    unit, upart = _gram(c.field, rows)
    return not unit.any() and not upart.any()


def is_self_orthogonal_set(cs: CodewordSet, chunk: int = 1024) -> bool:
    """Pairwise inner products over every codeword pair."""
    words = cs.words
    for i in range(0, len(words), chunk):
        unit, upart = _gram(cs.field, words[i : i + chunk], words)
        if unit.any() or upart.any():
            return False
    return True


def is_self_dual(c: CodeSpec) -> bool:
    """Self-orthogonal with exactly q^N codewords (size from the span)."""
    return code_log_size(c) == c.n and is_self_orthogonal(c)


def orthogonal_complement(cs: CodewordSet, cap: int = ORACLE_CAP) -> CodewordSet:
    """Scan all of R^N and keep what is orthogonal to every codeword."""
    field, n = cs.field, cs.length
    _check_cap(field.order, 2 * n, cap)
    basis = row_reduce(field, cs.words) if len(cs) > 1 else np.zeros((0, 2 * n), dtype=np.int64)
    ambient = span_words(field, np.eye(2 * n, dtype=np.int64))
    if len(basis) == 0:
        return CodewordSet(field, ambient)
    unit, upart = _gram(field, ambient, basis)
    keep = ~(unit.any(axis=1) | upart.any(axis=1))
    return CodewordSet(field, ambient[keep])


# census


def _selfdual_flags(specs: Sequence[CodeSpec]) -> list[bool]:
    return [is_self_dual(c) for c in specs]


def selfdual_among(
    specs: Iterable[CodeSpec], jobs: int = 1, chunk: int = 64
) -> Iterator[tuple[CodeSpec, bool]]:
    specs = list(specs)
    if jobs <= 1:
        for c in specs:
            yield c, is_self_dual(c)
        return
    blocks = [specs[i : i + chunk] for i in range(0, len(specs), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for block, flags in zip(blocks, pool.map(_selfdual_flags, blocks)):
            yield from zip(block, flags)


def brute_count_selfdual(
    s: int, field: FieldSpec, cap: int | None = DEFAULT_CAP, jobs: int = 1
) -> int:
    """Count self-dual codes among all cyclic codes by direct checking."""
    return sum(flag for _, flag in selfdual_among(enumerate_all_cyclic(s, field, cap), jobs))


def census(s: int, field: FieldSpec, cap: int | None = DEFAULT_CAP, jobs: int = 1) -> dict:
    """Per-case totals and self-dual counts over the full cyclic enumeration."""
    out = {f: [0, 0] for f in Family if not f.is_selfdual_family}
    selfdual = []
    for c, flag in selfdual_among(enumerate_all_cyclic(s, field, cap), jobs):
        out[c.family][0] += 1
        if flag:
            out[c.family][1] += 1
            selfdual.append(c)
    return {"per_case": out, "selfdual": selfdual}
