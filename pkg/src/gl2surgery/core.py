"""Exact 2x2 integer matrices, the congruence subgroups of GL(2, Z) and their
semidirect decompositions.

All entries are Python ints, so nothing overflows however long a word gets.
Matrices are immutable and hashable; ``x @ y`` is the matrix product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class DomainError(ValueError):
    """An argument is outside the subgroup or domain an operation requires."""


class ParseError(ValueError):
    """Text could not be parsed into the requested object."""


@dataclass(frozen=True, slots=True)
class IntMat2:
    """The matrix ((a, b), (c, d))."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows) -> IntMat2:
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @classmethod
    def parse(cls, text: str) -> IntMat2:
        """Parse the ``"a,b;c,d"`` form. Whitespace is ignored."""
        return parse_matrix(text)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def is_unimodular(self) -> bool:
        return self.det in (1, -1)

    def __matmul__(self, other: IntMat2) -> IntMat2:
        return IntMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> IntMat2:
        return IntMat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> IntMat2:
        det = self.det
        if det not in (1, -1):
            raise DomainError(f"{self} has determinant {det}, not invertible over Z")
        # det is its own inverse when it is a unit
        return IntMat2(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def __pow__(self, n: int) -> IntMat2:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = IDENTITY
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def mod(self, n: int) -> tuple[int, int, int, int]:
        return (self.a % n, self.b % n, self.c % n, self.d % n)

    def key(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_list(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"


IDENTITY = IntMat2(1, 0, 0, 1)

_INT = r"\s*([+-]?\d+)\s*"
_MATRIX_RE = re.compile(rf"^{_INT},{_INT};{_INT},{_INT}$")


def parse_matrix(text: str) -> IntMat2:
    match = _MATRIX_RE.match(text)
    if match is None:
        raise ParseError(f"expected a matrix as 'a,b;c,d', got {text!r}")
    return IntMat2(*(int(g) for g in match.groups()))


def mul(x: IntMat2, y: IntMat2) -> IntMat2:
    return x @ y


def inverse(x: IntMat2) -> IntMat2:
    return x.inverse()


def product(matrices) -> IntMat2:
    """Left-to-right product; the empty product is the identity."""
    result = IDENTITY
    for m in matrices:
        result = result @ m
    return result


class SubgroupTag(str, Enum):
    GL2Z = "GL2Z"
    SL2Z = "SL2Z"
    H1 = "H1"
    H2 = "H2"
    H4 = "H4"
    K6 = "K6"
    K4 = "K4"
    SolidTorusExtendable = "SolidTorusExtendable"


TAU3 = IntMat2(0, 1, -1, -1)
TAU2 = IntMat2(0, 1, 1, 0)


@lru_cache(maxsize=None)
def _k6_table() -> tuple[IntMat2, ...]:
    elements = [IDENTITY]
    frontier = [IDENTITY]
    while frontier:
        fresh = []
        for x in frontier:
            for g in (TAU3, TAU2):
                y = x @ g
                if y not in elements:
                    elements.append(y)
                    fresh.append(y)
        frontier = fresh
    return tuple(elements)


def k6_elements() -> tuple[IntMat2, ...]:
    """The six-element subgroup generated by TAU3 (order 3) and TAU2 (order 2).

    Its reduction mod 2 is a bijection onto GL(2, Z/2), so it is a complement
    of the level-2 congruence subgroup H2.
    """
    return _k6_table()


def k4_elements() -> tuple[IntMat2, ...]:
    return (IDENTITY, IntMat2(-1, 0, 0, 1), IntMat2(1, 0, 0, -1), IntMat2(-1, 0, 0, -1))


@lru_cache(maxsize=None)
def _k6_by_residue() -> dict[tuple[int, int, int, int], IntMat2]:
    return {k.mod(2): k for k in _k6_table()}


def membership(x: IntMat2, tag: SubgroupTag | str) -> bool:
    tag = SubgroupTag(tag)
    if not x.is_unimodular():
        return False
    if tag is SubgroupTag.GL2Z:
        return True
    if tag is SubgroupTag.SL2Z:
        return x.det == 1
    if tag is SubgroupTag.H1:
        return x.c % 2 == 0
    if tag is SubgroupTag.H2:
        return x.mod(2) == (1, 0, 0, 1)
    if tag is SubgroupTag.H4:
        return x.a % 4 == 1 and x.d % 4 == 1 and x.b % 2 == 0 and x.c % 2 == 0
    if tag is SubgroupTag.K6:
        return x in _k6_table()
    if tag is SubgroupTag.K4:
        return x.b == 0 and x.c == 0 and abs(x.a) == 1 and abs(x.d) == 1
    # homeomorphisms of D^2 x S^1 act on the boundary by ((+-1, *), (0, +-1))
    return x.c == 0 and abs(x.a) == 1 and abs(x.d) == 1


def classify(x: IntMat2) -> dict[str, bool]:
    return {tag.value: membership(x, tag) for tag in SubgroupTag}


def decompose_gl2(m: IntMat2) -> tuple[IntMat2, IntMat2]:
    """Split m = k @ h with k in K6 and h in H2.

    k is the unique element of K6 congruent to m mod 2.
    """
    if not m.is_unimodular():
        raise DomainError(f"{m} is not in GL(2, Z)")
    k = _k6_by_residue()[m.mod(2)]
    return k, k.inverse() @ m


def _unit_sign_mod4(x: int) -> int:
    return 1 if x % 4 == 1 else -1


def decompose_h2(m: IntMat2) -> tuple[IntMat2, IntMat2]:
    """Split m = k @ h with k = diag(+-1, +-1) in K4 and h in H4."""
    if not membership(m, SubgroupTag.H2):
        raise DomainError(f"{m} is not in H2")
    e1 = _unit_sign_mod4(m.a)
    e2 = _unit_sign_mod4(m.d)
    k = IntMat2(e1, 0, 0, e2)
    return k, k @ m
