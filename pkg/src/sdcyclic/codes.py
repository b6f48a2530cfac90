"""Cyclic codes of length 2^s over R, their duals, and the self-dual ones.

A code is an ideal of R[x]/(x^n - 1) = R[x]/((x+1)^n), n = 2^s. Every
ideal falls into one of five generator shapes (``Family.CASE_I`` ..
``Family.CASE_V``); each shape carries a polynomial ``b`` whose
(x+1)-adic coefficients range over a window ``alpha <= i < beta`` and are
zero below it. The self-dual codes come in three families built from the
nullspaces in :mod:`sdcyclic.solver`.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .exceptions import SizeOverflow, UnsupportedFamily
from .gf2m import FieldSpec
from .ring import RingVector
from .solver import SolutionSpace, solve_recursive, truncate
from .ypoly import YPoly, reciprocal_transform, to_x_basis

DEFAULT_CAP = int(os.environ.get("SDCYCLIC_CAP", 1 << 24))


class Family(str, enum.Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    CASE_III = "CaseIII"
    CASE_IV = "CaseIV"
    CASE_V = "CaseV"
    SD_TRIVIAL = "SD-Trivial"
    SD_TYPE_B = "SD-TypeB"
    SD_TYPE_C = "SD-TypeC"

    def __str__(self):
        return self.value

    @property
    def is_selfdual_family(self) -> bool:
        return self.value.startswith("SD-")


CASES = (Family.CASE_I, Family.CASE_II, Family.CASE_III, Family.CASE_IV, Family.CASE_V)
SD_FAMILIES = (Family.SD_TRIVIAL, Family.SD_TYPE_B, Family.SD_TYPE_C)


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def window(s: int, family: Family, k: int = 0, t: int = 0) -> tuple[int, int]:
    """(alpha, beta): b is a polynomial mod (x+1)^beta divisible by (x+1)^alpha."""
    n = 1 << s
    if family in (Family.CASE_I, Family.SD_TYPE_B):
        return n // 2 - 1, n - 1
    if family is Family.CASE_II:
        return _ceil_half(n - k) - 1, n - k - 1
    if family in (Family.CASE_IV, Family.CASE_V):
        return _ceil_half(t) - 1, t - 1
    if family is Family.SD_TYPE_C:
        return n // 2 - k - 1, n - 2 * k - 1
    return 0, 0


def check_params(s: int, family: Family, k: int = 0, t: int = 0) -> None:
    n = 1 << s
    ok = {
        Family.CASE_I: k == 0 and t == 0,
        Family.CASE_II: 1 <= k <= n - 1 and t == 0,
        Family.CASE_III: 0 <= k <= n and t == 0,
        Family.CASE_IV: k == 0 and 1 <= t <= n - 1,
        Family.CASE_V: 1 <= k <= n - 2 and 1 <= t <= n - k - 1,
        Family.SD_TRIVIAL: k == 0 and t == 0,
        Family.SD_TYPE_B: k == 0 and t == 0,
        Family.SD_TYPE_C: 1 <= k <= n // 2 - 1 and t == n - 2 * k,
    }[family]
    if not ok:
        raise ValueError(f"invalid parameters for {family} at s={s}: k={k}, t={t}")


@dataclass(frozen=True)
class CodeSpec:
    """Generator description of one cyclic code of length 2^s over R.

    ``b`` holds the (x+1)-adic coefficients b_0 .. b_{beta-1} of the
    window polynomial as raw field ints; entries below ``alpha`` are zero.
    Families without a window use ``b == ()``.
    """

    s: int
    field: FieldSpec
    family: Family
    k: int = 0
    t: int = 0
    b: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.s < 1:
            raise ValueError("s must be >= 1")
        check_params(self.s, self.family, self.k, self.t)
        alpha, beta = self.window
        if self.family in (Family.CASE_III, Family.SD_TRIVIAL):
            if self.b:
                raise ValueError(f"{self.family} takes no b")
            return
        b = tuple(int(c) for c in self.b)
        if len(b) < beta:
            b = b + (0,) * (beta - len(b))
        if len(b) != beta:
            raise ValueError(f"b has {len(b)} coefficients, window needs {beta}")
        if any(b[:alpha]):
            raise ValueError(f"b must be divisible by (x+1)^{alpha}")
        if any(not 0 <= c < self.field.order for c in b):
            raise ValueError("b coefficient outside the field")
        object.__setattr__(self, "b", b)

    @classmethod
    def _unchecked(cls, s, field, family, k=0, t=0, b=()) -> CodeSpec:
        # for specs the enumerators build from already-valid windows
        obj = object.__new__(cls)
        for name, value in (("s", s), ("field", field), ("family", family), ("k", k), ("t", t), ("b", b)):
            object.__setattr__(obj, name, value)
        return obj

    @property
    def n(self) -> int:
        return 1 << self.s

    @property
    def window(self) -> tuple[int, int]:
        return window(self.s, self.family, self.k, self.t)

    @property
    def b_poly(self) -> YPoly | None:
        return YPoly(self.field, self.b) if self.b else None

    def as_case(self) -> CodeSpec:
        """The Case I-V form of a self-dual family spec (identity on cases)."""
        n = self.n
        if self.family is Family.SD_TRIVIAL:
            return CodeSpec(self.s, self.field, Family.CASE_III, k=n // 2)
        if self.family is Family.SD_TYPE_B:
            return CodeSpec(self.s, self.field, Family.CASE_I, b=self.b)
        if self.family is Family.SD_TYPE_C:
            return CodeSpec(self.s, self.field, Family.CASE_V, k=self.k, t=self.t, b=self.b)
        return self

    def expected_log_size(self) -> int:
        """log_q |C| for q = 2^m, from the generator shape."""
        c = self.as_case()
        n, k, t = self.n, c.k, c.t
        return {
            Family.CASE_I: n,
            Family.CASE_II: n - k,
            Family.CASE_III: 2 * (n - k),
            Family.CASE_IV: 2 * n - t,
            Family.CASE_V: 2 * n - 2 * k - t,
        }[c.family]

    def generator_polys(self) -> list[tuple[YPoly, YPoly]]:
        """Generators as (unit part, u-part) pairs in the (x+1)-adic basis mod (x+1)^n."""
        c = self.as_case()
        n, F = self.n, self.field
        b = YPoly(F, c.b).resize(n) if c.b else YPoly.zero(F, n)
        mono = lambda i: YPoly.monomial(F, n, i)  # noqa: E731
        zero = YPoly.zero(F, n)
        if c.family is Family.CASE_I:
            return [(b.shift(1), mono(0))]
        if c.family is Family.CASE_II:
            return [(b.shift(c.k + 1), mono(c.k))]
        if c.family is Family.CASE_III:
            return [(mono(c.k), zero)]
        if c.family is Family.CASE_IV:
            return [(b.shift(1), mono(0)), (mono(c.t), zero)]
        return [(b.shift(c.k + 1), mono(c.k)), (mono(c.k + c.t), zero)]

    def generators(self) -> list[RingVector]:
        return generators(self)

    def describe(self) -> str:
        c = self.as_case()

        def power(e: int) -> str:
            return "1" if e == 0 else "(x+1)" if e == 1 else f"(x+1)^{e}"

        def times(e: int, rest: str) -> str:
            return rest if e == 0 else f"{power(e)}{rest}"

        bpart = "b(x)"
        gens = {
            Family.CASE_I: [f"{times(1, bpart)} + u"],
            Family.CASE_II: [f"{times(c.k + 1, bpart)} + u{'' if c.k == 0 else power(c.k)}"],
            Family.CASE_III: [power(c.k) if c.k < self.n else "0"],
            Family.CASE_IV: [f"{times(1, bpart)} + u", power(c.t)],
            Family.CASE_V: [f"{times(c.k + 1, bpart)} + u{power(c.k)}", power(c.k + c.t)],
        }[c.family]
        text = "<" + ", ".join(gens) + ">"
        if self.b or self.family not in (Family.CASE_III, Family.SD_TRIVIAL):
            terms = [f"{v:#x}(x+1)^{i}" for i, v in enumerate(self.b) if v]
            text += ", b(x) = " + (" + ".join(terms) if terms else "0")
        return text

    def to_json(self) -> dict:
        return {
            "family": str(self.family),
            "s": self.s,
            "m": self.field.m,
            "modulus": f"{self.field.modulus:#x}",
            "k": self.k,
            "t": self.t,
            "b": [f"{c:#x}" for c in self.b],
            "generators": [[e.to_str() for e in g] for g in self.generators()],
        }


def generators(c: CodeSpec) -> list[RingVector]:
    """Generator polynomials as coefficient vectors over R in the x basis."""
    return [
        RingVector(c.field, to_x_basis(unit), to_x_basis(upart))
        for unit, upart in c.generator_polys()
    ]


# counting


def count_all_cyclic(s: int, m: int) -> int:
    half = 1 << (s - 1)
    return sum((1 + 4 * i) * (1 << ((half - i) * m)) for i in range(half + 1))


def count_selfdual(s: int, m: int) -> int:
    """Number of self-dual cyclic codes of length 2^s over GF(2^m) + u GF(2^m)."""
    return sum(count_by_family(s, m).values())


def count_by_family(s: int, m: int) -> dict[Family, int]:
    """Closed-form per-family counts, evaluated as exact integer sums."""
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and m >= 1")
    q = 1 << m
    if s == 1:
        return {Family.SD_TRIVIAL: 1, Family.SD_TYPE_B: q, Family.SD_TYPE_C: 0}
    if s == 2:
        return {Family.SD_TRIVIAL: 1, Family.SD_TYPE_B: q * q, Family.SD_TYPE_C: q}
    quarter = 1 << (s - 2)
    type_c = q + 2 * sum(q ** (h + 1) for h in range(1, quarter))
    return {Family.SD_TRIVIAL: 1, Family.SD_TYPE_B: q ** (quarter + 1), Family.SD_TYPE_C: type_c}


def count_case(s: int, m: int, family: Family) -> int:
    """Number of codes in one of the five generator shapes."""
    q = 1 << m
    total = 0
    for k, t in _case_params(s, family):
        alpha, beta = window(s, family, k, t)
        total += q ** max(0, beta - alpha)
    return total


# enumeration


def _case_params(s: int, family: Family) -> Iterator[tuple[int, int]]:
    n = 1 << s
    if family is Family.CASE_I:
        yield 0, 0
    elif family is Family.CASE_II:
        for k in range(1, n):
            yield k, 0
    elif family is Family.CASE_III:
        for k in range(n + 1):
            yield k, 0
    elif family is Family.CASE_IV:
        for t in range(1, n):
            yield 0, t
    elif family is Family.CASE_V:
        for k in range(1, n - 1):
            for t in range(1, n - k):
                yield k, t
    else:
        raise UnsupportedFamily(f"{family} is not a generator case")


def _check_cap(total: int, cap: int | None) -> None:
    if cap is not None and total > cap:
        raise SizeOverflow(f"stream of {total} codes exceeds the cap {cap}")


def enumerate_all_cyclic(
    s: int, field: FieldSpec, cap: int | None = DEFAULT_CAP, families: Iterable[Family] = CASES
) -> Iterator[CodeSpec]:
    """Every cyclic code, Case I first, parameters ascending, b lexicographic."""
    families = tuple(families)
    _check_cap(sum(count_case(s, field.m, f) for f in families), cap)
    return _iter_cases(s, field, families)


def _iter_cases(s: int, field: FieldSpec, families) -> Iterator[CodeSpec]:
    q = field.order
    for family in families:
        for k, t in _case_params(s, family):
            alpha, beta = window(s, family, k, t)
            width = max(0, beta - alpha)
            for values in product(range(q), repeat=width):
                b = (0,) * alpha + values if family is not Family.CASE_III else ()
                yield CodeSpec._unchecked(s, field, family, k=k, t=t, b=b[:beta] if beta > 0 else ())


def selfdual_spaces(s: int) -> dict[int, SolutionSpace]:
    """Truncated nullspaces feeding the self-dual families, keyed by k (0 = type B)."""
    n = 1 << s
    spaces = {0: truncate(solve_recursive(n - 1), n // 2 - 1)}
    for k in range(1, n // 2):
        spaces[k] = truncate(solve_recursive(n - 2 * k - 1), n // 2 - k - 1)
    return spaces


def enumerate_selfdual(
    s: int, field: FieldSpec, cap: int | None = DEFAULT_CAP, families: Iterable[Family] = SD_FAMILIES
) -> Iterator[CodeSpec]:
    """All self-dual cyclic codes of length 2^s, without duplicates.

    Order: the trivial code, then type B in lexicographic order of its
    free coefficients, then type C by ascending k.
    """
    families = tuple(families)
    counts = count_by_family(s, field.m)
    _check_cap(sum(counts[f] for f in families), cap)
    return _iter_selfdual(s, field, families)


def _iter_selfdual(s: int, field: FieldSpec, families) -> Iterator[CodeSpec]:
    n = 1 << s
    spaces = selfdual_spaces(s)
    if Family.SD_TRIVIAL in families:
        yield CodeSpec(s, field, Family.SD_TRIVIAL)
    if Family.SD_TYPE_B in families:
        space = spaces[0]
        for tail in space.iter_vectors(field):
            yield CodeSpec._unchecked(s, field, Family.SD_TYPE_B, b=(0,) * space.delta + tuple(tail))
    if Family.SD_TYPE_C in families:
        for k in range(1, n // 2):
            space = spaces[k]
            for tail in space.iter_vectors(field):
                b = (0,) * space.delta + tuple(tail)
                yield CodeSpec._unchecked(s, field, Family.SD_TYPE_C, k=k, t=n - 2 * k, b=b)


# duality


def dual_code(c: CodeSpec) -> CodeSpec:
    """Dual code, renormalised into its own generator shape."""
    if c.family.is_selfdual_family:
        raise UnsupportedFamily(f"{c.family}: take the dual of c.as_case() instead")
    n, F = c.n, c.field

    def bar(beta: int) -> tuple[int, ...]:
        if beta <= 0:
            return ()
        full = reciprocal_transform(YPoly(F, c.b).resize(n))
        return full.resize(beta).coeffs

    if c.family is Family.CASE_I:
        return CodeSpec(c.s, F, Family.CASE_I, b=bar(n - 1))
    if c.family is Family.CASE_II:
        t = n - c.k
        return CodeSpec(c.s, F, Family.CASE_IV, t=t, b=bar(t - 1))
    if c.family is Family.CASE_III:
        return CodeSpec(c.s, F, Family.CASE_III, k=n - c.k)
    if c.family is Family.CASE_IV:
        return CodeSpec(c.s, F, Family.CASE_II, k=n - c.t, b=bar(c.t - 1))
    k2 = n - c.k - c.t
    return CodeSpec(c.s, F, Family.CASE_V, k=k2, t=c.t, b=bar(c.t - 1))
