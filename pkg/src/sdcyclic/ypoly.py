"""Truncated polynomials in GF(2^m)[x]/((x+1)^l), (x+1)-adic basis.

Entry i of ``YPoly.coeffs`` is the coefficient of (x+1)^i, stored as a raw
field int. Every YPoly carries its own ``l``; combining two of different
length is an error rather than a silent truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import ModulusMismatch, SpecMismatch
from .gf2m import FieldElement, FieldSpec
from .solver import pascal_block


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas' theorem."""
    return int(0 <= k <= n and (n & k) == k)


@dataclass(frozen=True)
class YPoly:
    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("YPoly needs l >= 1")
        q = self.field.order
        if any(not 0 <= c < q for c in self.coeffs):
            raise ValueError("coefficient outside the field")

    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs: Sequence[int | FieldElement]) -> YPoly:
        return cls(field, tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls, field: FieldSpec, l: int) -> YPoly:
        return cls(field, (0,) * l)

    @classmethod
    def one(cls, field: FieldSpec, l: int) -> YPoly:
        return cls(field, (1,) + (0,) * (l - 1))

    @classmethod
    def monomial(cls, field: FieldSpec, l: int, i: int, c: int = 1) -> YPoly:
        """c * (x+1)^i, zero once i >= l."""
        coeffs = [0] * l
        if i < l:
            coeffs[i] = c
        return cls(field, tuple(coeffs))

    @classmethod
    def x(cls, field: FieldSpec, l: int) -> YPoly:
        """x = 1 + (x+1)."""
        return cls(field, (1, 1)[:l] + (0,) * max(0, l - 2))

    @property
    def l(self) -> int:
        return len(self.coeffs)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        """Largest v with (x+1)^v dividing self; ``l`` for zero."""
        return next((i for i, c in enumerate(self.coeffs) if c), self.l)

    def _check(self, other: YPoly) -> None:
        if self.field != other.field:
            raise SpecMismatch(f"{self.field!r} vs {other.field!r}")
        if self.l != other.l:
            raise ModulusMismatch(f"(x+1)^{self.l} vs (x+1)^{other.l}")

    def __add__(self, other: YPoly) -> YPoly:
        self._check(other)
        return YPoly(self.field, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    __sub__ = __add__

    def __mul__(self, other: YPoly) -> YPoly:
        return mul_mod(self, other)

    def scale(self, c: int | FieldElement) -> YPoly:
        c = int(c)
        F = self.field
        return YPoly(F, tuple(F.mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> YPoly:
        """Multiply by (x+1)^k, dropping what falls off the top."""
        if k >= self.l:
            return YPoly.zero(self.field, self.l)
        return YPoly(self.field, (0,) * k + self.coeffs[: self.l - k])

    def resize(self, l: int) -> YPoly:
        """Reduce mod (x+1)^l, or zero-extend to a larger modulus."""
        if l <= self.l:
            return YPoly(self.field, self.coeffs[:l])
        return YPoly(self.field, self.coeffs + (0,) * (l - self.l))

    def to_json(self) -> dict:
        return {"l": self.l, "coeffs": [f"{c:#x}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> YPoly:
        coeffs = tuple(int(c, 16) for c in obj["coeffs"])
        if len(coeffs) != obj["l"]:
            raise ValueError("coefficient count disagrees with l")
        return cls(field, coeffs)


def x_inverse(l: int, field: FieldSpec) -> YPoly:
    """x^-1 mod (x+1)^l = 1 + (x+1) + ... + (x+1)^(l-1)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return YPoly(field, (1,) * l)


def mul_mod(p: YPoly, q: YPoly) -> YPoly:
    p._check(q)
    F, l = p.field, p.l
    out = [0] * l
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j in range(l - i):
            b = q.coeffs[j]
            if b:
                out[i + j] ^= F.mul(a, b)
    return YPoly(F, tuple(out))


def reciprocal_transform(b: YPoly) -> YPoly:
    """x^-1 b(x^-1) mod (x+1)^l, via the Pascal-mod-2 matrix."""
    return YPoly(b.field, tuple(pascal_block(b.l).apply(b.coeffs)))


def reciprocal_by_substitution(b: YPoly) -> YPoly:
    """Same map as :func:`reciprocal_transform`, by direct evaluation.

    Sums b_i * x^-1 * (x^-1 + 1)^i with truncated multiplication; shares
    no code with the matrix path.
    """
    F, l = b.field, b.l
    xinv = x_inverse(l, F)
    step = xinv + YPoly.one(F, l)
    term = xinv
    acc = YPoly.zero(F, l)
    for c in b.coeffs:
        if c:
            acc = acc + term.scale(c)
        term = mul_mod(term, step)
    return acc


def selfdual_defect(b: YPoly) -> YPoly:
    """b + x^-1 b(x^-1); zero exactly when b lies in Omega_l."""
    return b + reciprocal_transform(b)


def to_x_basis(b: YPoly) -> list[int]:
    """Coefficients of b in the monomial basis 1, x, x^2, ..."""
    return _binomial_transform(b.coeffs)


def from_x_basis(field: FieldSpec, c: Sequence[int]) -> YPoly:
    return YPoly(field, tuple(_binomial_transform([int(v) for v in c])))


def _binomial_transform(v: Sequence[int]) -> list[int]:
    # c_j = sum over i with (i & j) == j of v_i; an involution over F_2
    n = len(v)
    out = [0] * n
    for i, a in enumerate(v):
        if not a:
            continue
        # iterate submasks j of i that are < n
        j = i
        while True:
            if j < n:
                out[j] ^= a
            if j == 0:
                break
            j = (j - 1) & i
    return out
