"""Pascal-mod-2 matrices and the nullspaces that parametrise Omega_l.

``G(lam)`` is the 2^lam x 2^lam lower-triangular matrix obtained by
iterated Kronecker products of [[1, 0], [1, 1]]; it carries the
(x+1)-adic coefficients of b(x) to those of x^-1 b(x^-1). ``M(l)`` is the
upper-left l x l block of I + G, and a truncated polynomial b is fixed by
that map iff its coefficient vector lies in the nullspace of M(l).

All F_2 rows are Python ints used as bitsets: bit j set means column j
(or free symbol j) participates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

import numpy as np

from .exceptions import InconsistentSystem, MissingAssignment
from .gf2m import FieldSpec

MAX_LENGTH = 1 << 20


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BitMatrix:
    """Dense matrix over F_2 with rows packed into ints."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        if any(r < 0 or r >= limit for r in self.data):
            raise ValueError(f"row wider than {self.cols} columns")

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        cols = len(rows[0]) if rows else 0
        packed = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            packed.append(sum(1 << j for j, v in enumerate(r) if v & 1))
        return cls(len(rows), cols, tuple(packed))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def to_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.data]

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return BitMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.data:
            acc = 0
            for j in _bits(r):
                acc ^= other.data[j]
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def kron(self, other: BitMatrix) -> BitMatrix:
        out = []
        for r in self.data:
            for s in other.data:
                acc = 0
                for j in _bits(r):
                    acc |= s << (j * other.cols)
                out.append(acc)
        return BitMatrix(self.rows * other.rows, self.cols * other.cols, tuple(out))

    def block(self, nrows: int, ncols: int) -> BitMatrix:
        """Upper-left ``nrows x ncols`` submatrix."""
        mask = (1 << ncols) - 1
        return BitMatrix(nrows, ncols, tuple(r & mask for r in self.data[:nrows]))

    def is_lower_triangular(self, strict: bool = False) -> bool:
        bound = 0 if strict else 1
        return all(r >> (i + bound) == 0 for i, r in enumerate(self.data))

    def rank(self) -> int:
        return len(_echelon(self.data))

    def apply(self, vec: Sequence[int]) -> list[int]:
        """Multiply by a column vector of field ints (F_2 acts by XOR)."""
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        out = []
        for r in self.data:
            acc = 0
            for j in _bits(r):
                acc ^= vec[j]
            out.append(acc)
        return out


def _echelon(rows: Sequence[int]) -> dict[int, int]:
    """Pivot on the highest set bit; returns {pivot column: reduced row}."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return pivots


G2 = BitMatrix(2, 2, (0b01, 0b11))


@lru_cache(maxsize=None)
def build_G(lam: int) -> BitMatrix:
    """G_{2^lam} = G_2 kron G_{2^(lam-1)}."""
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    if (1 << lam) > MAX_LENGTH:
        raise ValueError(f"2^{lam} exceeds the supported length {MAX_LENGTH}")
    if lam == 1:
        return G2
    return G2.kron(build_G(lam - 1))


def level_for(l: int) -> int:
    """Least lam >= 1 with l <= 2^lam."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return max(1, (l - 1).bit_length())


@lru_cache(maxsize=None)
def pascal_block(l: int) -> BitMatrix:
    """Upper-left l x l block of G_{2^lam} with lam minimal."""
    if l > MAX_LENGTH:
        raise ValueError(f"l={l} exceeds the supported length {MAX_LENGTH}")
    return build_G(level_for(l)).block(l, l)


@lru_cache(maxsize=None)
def build_M(l: int) -> BitMatrix:
    """M_l: upper-left l x l block of I + G_{2^lam}."""
    return pascal_block(l) + BitMatrix.identity(l)


@dataclass(frozen=True)
class SolutionSpace:
    """Parametrised F_{2^m}-subspace of GF(2^m)^l with F_2 dependency rows.

    ``free`` are the coordinates that take arbitrary values. ``bound``
    maps every other coordinate to a bitset over *original* coordinate
    indices of free symbols; its value is the XOR of those symbols. For a
    truncated space (``delta`` > 0) coordinates are still numbered in the
    ambient length ``l``; the visible tail is ``delta .. l-1``.
    """

    l: int
    free: tuple[int, ...]
    bound: Mapping[int, int] = field(hash=False)
    delta: int = 0

    @property
    def dim(self) -> int:
        return len(self.free)

    @property
    def coords(self) -> range:
        return range(self.delta, self.l)

    def row(self, i: int) -> int:
        """Dependency bitset of coordinate ``i`` over the free symbols."""
        if i in self.bound:
            return self.bound[i]
        if i in self.free:
            return 1 << i
        raise IndexError(f"coordinate {i} outside {self.delta}..{self.l - 1}")

    def rows(self) -> list[int]:
        return [self.row(i) for i in self.coords]

    def materialize(self, assignment: Mapping[int, int]) -> list[int]:
        """Coefficient vector (coordinates ``delta..l-1``) for given free values."""
        missing = [i for i in self.free if i not in assignment]
        if missing:
            raise MissingAssignment(f"no value for free coordinates {missing}")
        extra = set(assignment) - set(self.free)
        if extra:
            raise MissingAssignment(f"coordinates {sorted(extra)} are not free")
        out = []
        for i in self.coords:
            acc = 0
            for j in _bits(self.row(i)):
                acc ^= assignment[j]
            out.append(acc)
        return out

    def iter_vectors(self, field: FieldSpec, chunk: int = 1 << 14) -> Iterator[list[int]]:
        """Every vector, free coordinates running lexicographically (first index slowest)."""
        q, dim = field.order, self.dim
        pos = {f: j for j, f in enumerate(self.free)}
        support = [[pos[j] for j in _bits(self.row(i))] for i in self.coords]
        weights = q ** np.arange(dim - 1, -1, -1, dtype=np.int64)
        total = q**dim
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            values = (idx[:, None] // weights[None, :]) % q
            out = np.zeros((len(idx), len(support)), dtype=np.int64)
            for i, cols in enumerate(support):
                if cols:
                    out[:, i] = np.bitwise_xor.reduce(values[:, cols], axis=1)
            yield from out.tolist()

    def basis(self) -> list[list[int]]:
        """One F_2 vector per free symbol; spans the space over any GF(2^m)."""
        return [self.materialize({j: int(j == f) for j in self.free}) for f in self.free]

    def cardinality(self, m: int) -> int:
        return space_cardinality(self, m)

    def canonical(self) -> tuple:
        return (self.l, self.delta, self.free, tuple(sorted(self.bound.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SolutionSpace):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def describe(self) -> str:
        """Parametrisation in the style ``(0, b1, b1, b3)``."""
        parts = []
        for i in self.coords:
            syms = list(_bits(self.row(i)))
            parts.append(" + ".join(f"b{j}" for j in syms) if syms else "0")
        return "(" + ", ".join(parts) + ")"


def _nullspace(rows: Sequence[int], n: int) -> tuple[tuple[int, ...], dict[int, int]]:
    pivots = _echelon(rows)
    free = tuple(j for j in range(n) if j not in pivots)
    bound: dict[int, int] = {}
    for p in sorted(pivots):
        # pivot p = XOR of the lower columns in its row, already resolved
        acc = 0
        for j in _bits(pivots[p] ^ (1 << p)):
            acc ^= bound.get(j, 1 << j)
        bound[p] = acc
    return free, bound


def solve_homogeneous(l: int) -> SolutionSpace:
    """Nullspace of M_l by elimination pivoting on the highest column."""
    free, bound = _nullspace(build_M(l).data, l)
    return SolutionSpace(l, free, bound)


@lru_cache(maxsize=None)
def solve_recursive(l: int) -> SolutionSpace:
    """Nullspace of M_l built from the nullspace at the previous power of two.

    For l = 2^(lam-1) + tau the head coordinates form S at 2^(lam-1), and
    the tail solves M_tau * tail = (first tau head coordinates).
    """
    if l <= 2:
        return solve_homogeneous(l)
    half = 1 << (level_for(l) - 1)
    tau = l - half
    head = solve_recursive(half)
    rhs = [head.row(i) for i in range(tau)]

    # augmented rows: (coefficients over tail unknowns, rhs over head symbols)
    pivots: dict[int, tuple[int, int]] = {}
    for coeffs, r in zip(build_M(tau).data, rhs):
        while coeffs:
            top = coeffs.bit_length() - 1
            if top not in pivots:
                pivots[top] = (coeffs, r)
                break
            pc, pr = pivots[top]
            coeffs ^= pc
            r ^= pr
        else:
            if r:
                raise InconsistentSystem(
                    f"l={l}: tail system forces a nontrivial relation on head symbols"
                )

    free = list(head.free)
    bound = dict(head.bound)
    for j in range(tau):
        if j not in pivots:
            free.append(half + j)
    for p in sorted(pivots):
        coeffs, r = pivots[p]
        acc = r
        for j in _bits(coeffs ^ (1 << p)):
            acc ^= bound.get(half + j, 1 << (half + j))
        bound[half + p] = acc
    return SolutionSpace(l, tuple(sorted(free)), bound)


def truncate(space: SolutionSpace, delta: int) -> SolutionSpace:
    """Vectors of ``space`` whose first ``delta`` coordinates vanish."""
    if not 0 <= delta < space.l:
        raise ValueError(f"need 0 <= delta < {space.l}, got {delta}")
    if delta < space.delta:
        raise ValueError("cannot un-truncate a space")
    # each forced-zero coordinate gives a linear relation among free symbols
    relations = _echelon([space.row(i) for i in range(space.delta, delta)])
    # substitute pivot symbol p := XOR of the other symbols in its relation
    subst: dict[int, int] = {}
    for p in sorted(relations):
        acc = 0
        for j in _bits(relations[p] ^ (1 << p)):
            acc ^= subst.get(j, 1 << j)
        subst[p] = acc

    def resolve(mask: int) -> int:
        acc = 0
        for j in _bits(mask):
            acc ^= subst.get(j, 1 << j)
        return acc

    free = tuple(j for j in space.free if j not in subst)
    bound = {}
    for i in range(delta, space.l):
        if i in free:
            continue
        bound[i] = resolve(space.row(i))
    return SolutionSpace(space.l, free, bound, delta)


def space_cardinality(space: SolutionSpace, m: int) -> int:
    return (1 << m) ** space.dim


def is_solution(l: int, vec: Sequence[int]) -> bool:
    """True iff the full-length coefficient vector satisfies M_l vec = 0."""
    return not any(build_M(l).apply(list(vec)))
