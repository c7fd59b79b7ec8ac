"""Exact-integer arithmetic for the Cayley-Dickson tower of 2^n-ion algebras.

Basis units are indexed 0 .. 2^n - 1 and obey XOR indexing: the product of
units i and j lands on unit i XOR j, with a sign determined by the doubling
construction.  Two independent engines compute that sign:

* ``basis_product_recursive`` -- the doubling rule applied literally, halving
  indices until the real base case.  Slow path, used as the oracle.
* ``build_table`` -- iterative quadrant doubling of the full multiplication
  table, one level at a time.  Fast path, used by ``multiply``.

Their cell-by-cell agreement is the core correctness argument for everything
downstream, so both are kept and cross-checked rather than merged.

All coefficients are exact Python integers; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

DEFAULT_LEVEL_CAP = 8

#: Conventional names for the first few doubling levels.
LEVEL_NAMES = {
    0: "Reals",
    1: "Complexes",
    2: "Quaternions",
    3: "Octonions",
    4: "Sedenions",
    5: "Pathions",
    6: "Chingons",
    7: "Routons",
    8: "Voudons",
}


@dataclass(frozen=True, order=True)
class Level:
    """Doubling level: the algebra has dimension 2^n."""

    n: int
    cap: InitVar[int] = DEFAULT_LEVEL_CAP

    def __post_init__(self, cap: int) -> None:
        if self.n < 0:
            raise ValueError(f"level must be non-negative, got {self.n}")
        if self.n > cap:
            raise ValueError(f"level {self.n} exceeds cap {cap}")

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def generator(self) -> int:
        """Index of the unit that generated this level from the previous one."""
        if self.n == 0:
            raise ValueError("the reals have no generator")
        return 1 << (self.n - 1)

    @property
    def name(self) -> str:
        return LEVEL_NAMES.get(self.n, f"2^{self.n}-ions")


LevelLike = Union[Level, int]


def as_level(level: LevelLike, cap: int = DEFAULT_LEVEL_CAP) -> Level:
    if isinstance(level, Level):
        return level
    return Level(level, cap)


@dataclass(frozen=True, order=True)
class SignedUnit:
    """A basis unit reference: sign times e_index."""

    sign: int
    index: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.index < 0:
            raise ValueError(f"index must be non-negative, got {self.index}")

    def __neg__(self) -> "SignedUnit":
        return SignedUnit(-self.sign, self.index)

    def __str__(self) -> str:
        # "-0" is a real entry: -1 times the real unit.
        return f"{'-' if self.sign < 0 else ''}{self.index}"


@lru_cache(maxsize=None)
def _basis_sign_index(i: int, j: int, n: int) -> tuple[int, int]:
    """Sign and index of e_i * e_j at level n, by recursive halving.

    Each index splits into a lower half (kept) or an upper half (reduced by
    the half-dimension); the doubled product is (A,B)(C,D) =
    (AC - D*B, BC* + DA), with conjugation of a pure imaginary unit acting
    as negation and the real unit fixed.
    """
    if n == 0:
        return (1, 0)
    h = 1 << (n - 1)
    if i < h and j < h:
        return _basis_sign_index(i, j, n - 1)
    if i < h:
        # (A, 0)(0, D) = (0, DA)
        s, k = _basis_sign_index(j - h, i, n - 1)
        return (s, k + h)
    if j < h:
        # (0, B)(C, 0) = (0, B C*)
        s, k = _basis_sign_index(i - h, j, n - 1)
        return (s if j == 0 else -s, k + h)
    # (0, B)(0, D) = (-D* B, 0)
    s, k = _basis_sign_index(j - h, i - h, n - 1)
    return (-s if j == h else s, k)


def basis_product_recursive(i: int, j: int, level: LevelLike) -> SignedUnit:
    """Oracle engine: product of basis units e_i and e_j at the given level."""
    lvl = as_level(level)
    dim = lvl.dim
    if not (0 <= i < dim and 0 <= j < dim):
        raise ValueError(f"indices ({i}, {j}) out of range for dimension {dim}")
    sign, index = _basis_sign_index(i, j, lvl.n)
    return SignedUnit(sign, index)


@dataclass(frozen=True)
class MultiplicationTable:
    """Dense basis-product table for one level, immutable once built."""

    level: Level
    signs: tuple[tuple[int, ...], ...]
    indices: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.level.dim

    def entry(self, i: int, j: int) -> SignedUnit:
        return SignedUnit(self.signs[i][j], self.indices[i][j])

    def rows(self) -> Iterator[tuple[SignedUnit, ...]]:
        for i in range(self.dim):
            yield tuple(self.entry(i, j) for j in range(self.dim))


def build_table(level: LevelLike, cap: int = DEFAULT_LEVEL_CAP) -> MultiplicationTable:
    """Fast engine: build the full table by quadrant doubling.

    The doubled table is four copies of the previous one.  Quadrant I
    (upper left) is kept as is.  Each other quadrant copies I's content
    with its index shifted and its sign flipped or kept according to
    whether the cell lies on the quadrant's "trident": its top row, its
    leftmost column, and its main diagonal.
    """
    lvl = as_level(level, cap)
    signs: list[list[int]] = [[1]]
    indices: list[list[int]] = [[0]]
    for m in range(lvl.n):
        h = 1 << m
        size = 2 * h
        new_s = [[0] * size for _ in range(size)]
        new_i = [[0] * size for _ in range(size)]
        for r in range(h):
            row_s, row_i = signs[r], indices[r]
            for c in range(h):
                s, k = row_s[c], row_i[c]
                trident = r == 0 or c == 0 or r == c
                # I: unchanged.
                new_s[r][c], new_i[r][c] = s, k
                # II (upper right): content h + k; sign kept on the trident.
                s2 = s if trident else -s
                new_s[r][h + c], new_i[r][h + c] = s2, h + k
                # III (lower right): content k; sign kept on the trident
                # except its leftmost column, flipped elsewhere.
                if c == 0:
                    s3 = -s
                elif trident:
                    s3 = s
                else:
                    s3 = -s
                new_s[h + r][h + c], new_i[h + r][h + c] = s3, k
                # IV (lower left): content of the matching II cell; sign
                # flipped on the trident except the 0th-column extension.
                if c == 0:
                    s4 = s2
                elif r == 0 or r == c:
                    s4 = -s2
                else:
                    s4 = s2
                new_s[h + r][c], new_i[h + r][c] = s4, h + k
        signs, indices = new_s, new_i
    return MultiplicationTable(
        lvl,
        tuple(tuple(row) for row in signs),
        tuple(tuple(row) for row in indices),
    )


@lru_cache(maxsize=None)
def _cached_table(n: int) -> MultiplicationTable:
    return build_table(Level(n))


def table_for(level: LevelLike) -> MultiplicationTable:
    """Shared immutable table for a level (built once, cached)."""
    return _cached_table(as_level(level).n)


class Multivector:
    """Sparse exact-integer element of a 2^n-ion algebra.

    Coefficients are a map basis-index -> nonzero int; the zero element has
    an empty map.  Instances behave as immutable values.
    """

    __slots__ = ("level", "_coeffs")

    def __init__(self, level: LevelLike, coeffs: Mapping[int, int] | None = None):
        lvl = as_level(level)
        clean: dict[int, int] = {}
        for index, coeff in (coeffs or {}).items():
            if not (0 <= index < lvl.dim):
                raise ValueError(f"index {index} out of range for {lvl.name}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient for e{index} must be int, got {type(coeff).__name__}")
            if coeff != 0:
                clean[index] = coeff
        object.__setattr__(self, "level", lvl)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Multivector is immutable")

    @classmethod
    def zero(cls, level: LevelLike) -> "Multivector":
        return cls(level, {})

    @classmethod
    def unit(cls, index: int, level: LevelLike, coeff: int = 1) -> "Multivector":
        return cls(level, {index: coeff})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._coeffs)

    def terms(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._coeffs.items()))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.level == other.level and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.level, self.terms()))

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_level(other)
        merged = dict(self._coeffs)
        for k, v in other._coeffs.items():
            merged[k] = merged.get(k, 0) + v
        return Multivector(self.level, merged)

    def __neg__(self) -> "Multivector":
        return Multivector(self.level, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "Multivector":
        if not isinstance(scalar, int):
            return NotImplemented
        return Multivector(self.level, {k: scalar * v for k, v in self._coeffs.items()})

    def __mul__(self, other: object) -> "Multivector":
        if isinstance(other, int):
            return self.__rmul__(other)
        if isinstance(other, Multivector):
            return multiply(self, other)
        return NotImplemented

    def conjugate(self) -> "Multivector":
        return conjugate(self)

    def norm_sq(self) -> int:
        """Sum of squared coefficients (the real part of x * x-conjugate)."""
        return sum(v * v for v in self._coeffs.values())

    def _check_level(self, other: "Multivector") -> None:
        if self.level != other.level:
            raise ValueError(f"level mismatch: {self.level.n} vs {other.level.n}")

    def __repr__(self) -> str:
        return f"Multivector({self.level.n}, {dict(self.terms())})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for index, coeff in self.terms():
            mag = abs(coeff)
            body = f"e{index}" if mag == 1 else f"{mag}*e{index}"
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def multiply(x: Multivector, y: Multivector) -> Multivector:
    """Bilinear product, distributing the table engine over all term pairs."""
    x._check_level(y)
    table = table_for(x.level)
    signs, indices = table.signs, table.indices
    acc: dict[int, int] = {}
    for i, a in x._coeffs.items():
        srow, irow = signs[i], indices[i]
        for j, b in y._coeffs.items():
            k = irow[j]
            acc[k] = acc.get(k, 0) + srow[j] * a * b
    return Multivector(x.level, acc)


def conjugate(x: Multivector) -> Multivector:
    """Negate every non-real coefficient."""
    return Multivector(
        x.level, {k: (v if k == 0 else -v) for k, v in x._coeffs.items()}
    )


@dataclass(frozen=True, order=True)
class NatoTriplet:
    """XOR-closed index triple written so all cyclic products are positive."""

    a: int
    b: int
    c: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def as_set(self) -> frozenset[int]:
        return frozenset((self.a, self.b, self.c))

    def __str__(self) -> str:
        return f"({self.a} {self.b} {self.c})"


def nato_rotation(triple: Iterable[int], level: LevelLike) -> NatoTriplet:
    """Canonical rotation of an XOR-closed triple: smallest index first,
    rotated (not sorted) so that first*second = +third."""
    a, b, c = sorted(triple)
    if a ^ b != c:
        raise ValueError(f"({a}, {b}, {c}) is not XOR-closed")
    if basis_product_recursive(a, b, level).sign > 0:
        return NatoTriplet(a, b, c)
    return NatoTriplet(a, c, b)


def nato_triplets(level: LevelLike) -> tuple[NatoTriplet, ...]:
    """All XOR-closed triples of distinct nonzero indices, each once, in
    canonical rotation; there are (2^n - 1)(2^n - 2)/6 of them."""
    lvl = as_level(level)
    if lvl.n < 2:
        raise ValueError("triplets need at least the quaternions (n >= 2)")
    table = table_for(lvl)
    out = []
    for a in range(1, lvl.dim):
        for b in range(a + 1, lvl.dim):
            c = a ^ b
            if c > b:
                if table.signs[a][b] > 0:
                    out.append(NatoTriplet(a, b, c))
                else:
                    out.append(NatoTriplet(a, c, b))
    return tuple(out)
