"""Arithmetic in GF(2^m), 1 <= m <= 16.

Elements are stored as ints whose bits are polynomial coefficients over
GF(2) (bit i <-> x^i), always reduced below the modulus degree. The
containers elsewhere in the package keep these raw ints; ``FieldElement``
is the boxed value type for user-facing code.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .exceptions import DegreeMismatch, DivisionByZero, ReducibleModulus, SpecMismatch

MAX_DEGREE = 16
TABLE_DEGREE = 8


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def polymod(a: int, modulus: int) -> int:
    deg = modulus.bit_length() - 1
    while a.bit_length() - 1 >= deg:
        a ^= modulus << (a.bit_length() - 1 - deg)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree <= deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if not poly & 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if polymod(poly, d) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible of degree m with constant term 1."""
    for poly in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(poly):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) defined by an irreducible ``modulus`` of degree ``m``.

    Construction validates the modulus. For m <= 8 a full multiplication
    table, an inverse table and log/antilog tables are precomputed.
    """

    m: int
    modulus: int
    _mul: np.ndarray | None = dc_field(default=None, init=False, repr=False, compare=False)
    _inv: np.ndarray | None = dc_field(default=None, init=False, repr=False, compare=False)
    _exp: tuple | None = dc_field(default=None, init=False, repr=False, compare=False)
    _log: tuple | None = dc_field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        m, modulus = self.m, self.modulus
        if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
            raise DegreeMismatch(f"extension degree must be in 1..{MAX_DEGREE}, got {m!r}")
        if modulus.bit_length() != m + 1:
            raise DegreeMismatch(
                f"modulus {modulus:#x} has degree {modulus.bit_length() - 1}, expected {m}"
            )
        if not modulus & 1:
            raise ReducibleModulus(f"modulus {modulus:#x} has zero constant term")
        if not is_irreducible(modulus):
            raise ReducibleModulus(f"modulus {modulus:#x} is reducible over GF(2)")
        if m <= TABLE_DEGREE:
            self._build_tables()

    def _build_tables(self):
        q = self.order
        elems = np.arange(q, dtype=np.int64)
        # row a of the table is a * x^i accumulated over the bits of b
        table = np.zeros((q, q), dtype=np.int64)
        shifted = elems.copy()
        for i in range(self.m):
            table ^= np.where(((elems >> i) & 1)[None, :] == 1, shifted[:, None], 0)
            shifted = self._xtime_array(shifted)
        table = table.astype(np.uint16)
        inv = np.zeros(q, dtype=np.uint16)
        rows, cols = np.nonzero(table == 1)
        inv[rows] = cols
        gen = next(g for g in range(2, q) if _order_of(table, g) == q - 1) if q > 2 else 1
        exp = [1]
        for _ in range(q - 2):
            exp.append(int(table[exp[-1], gen]))
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        object.__setattr__(self, "_mul", table)
        object.__setattr__(self, "_inv", inv)
        object.__setattr__(self, "_exp", tuple(exp))
        object.__setattr__(self, "_log", tuple(log))

    def _xtime_array(self, a: np.ndarray) -> np.ndarray:
        a = a << 1
        return np.where(a >> self.m, a ^ self.modulus, a)

    @property
    def order(self) -> int:
        return 1 << self.m

    @property
    def has_tables(self) -> bool:
        return self._mul is not None

    def __repr__(self):
        return f"FieldSpec(m={self.m}, modulus={self.modulus:#x})"

    # scalar kernels on raw ints

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return int(self._mul[a, b])
        return polymod(clmul(a, b), self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in GF(2^m)")
        if self._inv is not None:
            return int(self._inv[a])
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def log(self, a: int) -> int:
        """Discrete log to the table generator (m <= 8 only)."""
        if self._log is None:
            raise NotImplementedError("log tables exist only for m <= 8")
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def antilog(self, i: int) -> int:
        if self._exp is None:
            raise NotImplementedError("log tables exist only for m <= 8")
        return self._exp[i % (self.order - 1)]

    # vectorised kernels on integer arrays

    def mul_array(self, a, b) -> np.ndarray:
        """Elementwise product of broadcastable integer arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._mul is not None:
            return self._mul[a, b].astype(np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        for i in range(self.m):
            out ^= np.where((b >> i) & 1, a, 0)
            a = self._xtime_array(a)
        return out

    def inv_array(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero in GF(2^m)")
        if self._inv is not None:
            return self._inv[a].astype(np.int64)
        return np.vectorize(self.inv, otypes=[np.int64])(a)

    # boxed values

    def element(self, bits: int) -> FieldElement:
        if not 0 <= bits < self.order:
            raise ValueError(f"{bits:#x} is not a reduced element of GF(2^{self.m})")
        return FieldElement(self, bits)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.order)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def generator(self) -> FieldElement:
        """The class of x, i.e. the root of the modulus."""
        return FieldElement(self, polymod(0b10, self.modulus))


def _order_of(table: np.ndarray, g: int) -> int:
    x, n = g, 1
    while x != 1:
        x = int(table[x, g])
        n += 1
    return n


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    bits: int

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise SpecMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.bits ^ other.bits)

    __sub__ = __add__

    def __neg__(self) -> FieldElement:
        return self

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.bits, other.bits))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.field, self.field.pow(self.bits, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __int__(self) -> int:
        return self.bits

    def __repr__(self):
        return f"GF(2^{self.field.m})({self.bits:#x})"

    def hex(self) -> str:
        return f"{self.bits:#x}"


@lru_cache(maxsize=None)
def field_new(m: int, modulus: int | None = None) -> FieldSpec:
    """Validated field; ``modulus`` defaults to the smallest irreducible."""
    if modulus is None:
        if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
            raise DegreeMismatch(f"extension degree must be in 1..{MAX_DEGREE}, got {m!r}")
        modulus = smallest_irreducible(m)
    return FieldSpec(m, modulus)


def parse_modulus(text: str) -> int:
    """Parse a hex bit-vector such as ``0x7`` (x^2 + x + 1)."""
    return int(text, 16)


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()
