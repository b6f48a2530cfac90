"""The chain ring R = GF(2^m) + u GF(2^m) with u^2 = 0, and vectors over it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import LengthMismatch, SpecMismatch
from .gf2m import FieldElement, FieldSpec


@dataclass(frozen=True)
class RingElement:
    """a + b*u, with ``a`` and ``b`` stored as raw field ints."""

    field: FieldSpec
    a: int
    b: int = 0

    @classmethod
    def from_elements(cls, a: FieldElement, b: FieldElement) -> RingElement:
        if a.field != b.field:
            raise SpecMismatch(f"{a.field!r} vs {b.field!r}")
        return cls(a.field, a.bits, b.bits)

    @property
    def unit_part(self) -> FieldElement:
        return FieldElement(self.field, self.a)

    @property
    def u_part(self) -> FieldElement:
        return FieldElement(self.field, self.b)

    def is_unit(self) -> bool:
        return self.a != 0

    def _check(self, other: RingElement) -> None:
        if other.field != self.field:
            raise SpecMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.field, self.a ^ other.a, self.b ^ other.b)

    __sub__ = __add__

    def __mul__(self, other: RingElement) -> RingElement:
        return ring_mul(self, other)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def inverse(self) -> RingElement:
        # (a + bu)^-1 = a^-1 + a^-2 b u
        F = self.field
        ai = F.inv(self.a)
        return RingElement(F, ai, F.mul(F.mul(ai, ai), self.b))

    def lee_weight(self) -> int:
        return lee_weight(self)

    def to_str(self) -> str:
        """``a:b`` in hex, the JSON export form."""
        return f"{self.a:x}:{self.b:x}"

    @classmethod
    def from_str(cls, field: FieldSpec, text: str) -> RingElement:
        a, b = text.split(":")
        return cls(field, int(a, 16), int(b, 16))

    def __repr__(self):
        if self.b == 0:
            return f"R({self.a:#x})"
        return f"R({self.a:#x} + {self.b:#x}u)"


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    x._check(y)
    F = x.field
    return RingElement(F, F.mul(x.a, y.a), F.mul(x.a, y.b) ^ F.mul(y.a, x.b))


def lee_weight(x: RingElement) -> int:
    """Hamming weight of the Gray image (b, a + b)."""
    return (x.b != 0) + ((x.a ^ x.b) != 0)


def ring_elements(field: FieldSpec) -> list[RingElement]:
    q = field.order
    return [RingElement(field, a, b) for a in range(q) for b in range(q)]


class RingVector(Sequence[RingElement]):
    """Fixed-length vector over R.

    Stored as two parallel tuples of raw field ints: the unit parts and
    the u-parts. The length is not required to be a power of two.
    """

    __slots__ = ("field", "a", "b")

    def __init__(self, field: FieldSpec, a: Iterable[int], b: Iterable[int] | None = None):
        a = tuple(int(v) for v in a)
        b = (0,) * len(a) if b is None else tuple(int(v) for v in b)
        if len(a) != len(b):
            raise LengthMismatch(f"unit parts {len(a)} vs u-parts {len(b)}")
        self.field = field
        self.a = a
        self.b = b

    @classmethod
    def from_elements(cls, entries: Sequence[RingElement]) -> RingVector:
        if not entries:
            raise ValueError("cannot infer the field of an empty vector")
        field = entries[0].field
        for e in entries:
            if e.field != field:
                raise SpecMismatch("entries from different fields")
        return cls(field, (e.a for e in entries), (e.b for e in entries))

    @classmethod
    def zeros(cls, field: FieldSpec, n: int) -> RingVector:
        return cls(field, (0,) * n)

    def __len__(self) -> int:
        return len(self.a)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return RingVector(self.field, self.a[i], self.b[i])
        return RingElement(self.field, self.a[i], self.b[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingVector):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.field, self.a, self.b))

    def __add__(self, other: RingVector) -> RingVector:
        _check_pair(self, other)
        return RingVector(
            self.field,
            (x ^ y for x, y in zip(self.a, other.a)),
            (x ^ y for x, y in zip(self.b, other.b)),
        )

    def scale(self, r: RingElement) -> RingVector:
        F = self.field
        return RingVector(
            F,
            (F.mul(r.a, x) for x in self.a),
            (F.mul(r.a, y) ^ F.mul(r.b, x) for x, y in zip(self.a, self.b)),
        )

    def __repr__(self):
        return "RingVector(" + ", ".join(e.to_str() for e in self) + ")"


def _check_pair(v: RingVector, w: RingVector) -> None:
    if v.field != w.field:
        raise SpecMismatch(f"{v.field!r} vs {w.field!r}")
    if len(v) != len(w):
        raise LengthMismatch(f"lengths {len(v)} and {len(w)}")


def inner_product(v: RingVector, w: RingVector) -> RingElement:
    """Euclidean inner product sum_i v_i w_i over R."""
    _check_pair(v, w)
    F = v.field
    a = b = 0
    for a1, b1, a2, b2 in zip(v.a, v.b, w.a, w.b):
        a ^= F.mul(a1, a2)
        b ^= F.mul(a1, b2) ^ F.mul(a2, b1)
    return RingElement(F, a, b)


def cyclic_shift(v: RingVector, k: int = 1) -> RingVector:
    """(v_0, ..., v_{N-1}) -> (v_{N-1}, v_0, ..., v_{N-2}), applied k times."""
    n = len(v)
    if n == 0:
        return v
    k %= n
    return RingVector(v.field, v.a[n - k:] + v.a[: n - k], v.b[n - k:] + v.b[: n - k])
