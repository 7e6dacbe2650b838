"""Surgery descriptors on the boundary of a solid torus.

A descriptor is an SL(2, Z) matrix in the ordered basis (meridian, longitude)
of the boundary torus; its first column (a, c) is the image of the meridian.
Re-choosing the trivialization of the solid torus multiplies the matrix on
the right by ((+-1, m), (0, +-1)), and neither c nor a/c mod 1 notices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .core import DomainError, IntMat2, decompose_h2
from .words import Word, factor_h1


@dataclass(frozen=True, slots=True)
class TorusCurveClass:
    """Isotopy class C_{a,b} of a simple closed curve on the torus.

    Stored with the first nonzero coordinate positive, since C_{a,b} and
    C_{-a,-b} are the same class.
    """

    a: int
    b: int

    def __post_init__(self):
        if gcd(self.a, self.b) != 1:
            raise DomainError(f"({self.a},{self.b}) is not a primitive class")
        if self.a < 0 or (self.a == 0 and self.b < 0):
            object.__setattr__(self, "a", -self.a)
            object.__setattr__(self, "b", -self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True, slots=True)
class SurgeryDescriptor:
    matrix: IntMat2

    def __post_init__(self):
        if self.matrix.det != 1:
            raise DomainError(f"surgery matrix {self.matrix} must have determinant +1")

    @property
    def meridian_image(self) -> TorusCurveClass:
        return TorusCurveClass(self.matrix.a, self.matrix.c)

    def __str__(self) -> str:
        return str(self.matrix)


def as_descriptor(s) -> SurgeryDescriptor:
    return s if isinstance(s, SurgeryDescriptor) else SurgeryDescriptor(s)


class SurgeryInvariants(NamedTuple):
    c: int
    r: Fraction | None  # None when c == 0

    def to_record(self) -> dict:
        return {"c": self.c, "r": "undefined" if self.r is None else f"{self.r.numerator}/{self.r.denominator}"}


def surgery_invariants(s) -> SurgeryInvariants:
    """c is the lower-left entry, r = a/c reduced into [0, 1)."""
    m = as_descriptor(s).matrix
    if m.c == 0:
        return SurgeryInvariants(0, None)
    return SurgeryInvariants(m.c, Fraction(m.a, m.c) % 1)


def change_framing(s, m: int, s1: int = 1, s2: int = 1) -> SurgeryDescriptor:
    """Re-trivialize the solid torus by ((s1, m), (0, s2)).

    The product is rescaled by the global sign s1, which the surgery does not
    see, so the meridian image (a, c) is left literally unchanged. When
    s1 * s2 = -1 the longitude is reversed once more, i.e. s2 is flipped
    together with m, to keep the determinant at +1.
    """
    if abs(s1) != 1 or abs(s2) != 1:
        raise ValueError("framing signs must be +1 or -1")
    x = as_descriptor(s).matrix
    if s1 * s2 == -1:
        m, s2 = -m, -s2
    f = IntMat2(s1, m, 0, s2)
    return SurgeryDescriptor((x @ f) if s1 == 1 else -(x @ f))


def is_trivial_mod2(s) -> bool:
    return as_descriptor(s).matrix.c % 2 == 0


def is_topological_flop(s) -> bool:
    return surgery_invariants(s).r == Fraction(1, 2)


class Normalized(NamedTuple):
    descriptor: SurgeryDescriptor
    framing: int
    sign: IntMat2  # the K4 factor diag(+-1, +-1), reported rather than absorbed


def normalize_to_h2(s) -> Normalized:
    """Change framing so that the matrix is congruent to I mod 2.

    c even and det 1 force a, d odd; if b is odd one framing twist by m = -1
    makes it even.
    """
    desc = as_descriptor(s)
    if not is_trivial_mod2(desc):
        raise DomainError(f"{desc} is not trivial mod 2 (c is odd)")
    m = -1 if desc.matrix.b % 2 else 0
    out = change_framing(desc, m) if m else desc
    sign, _ = decompose_h2(out.matrix)
    return Normalized(out, m, sign)


def flop_decomposition(s) -> Word:
    """Write a mod-2-trivial surgery as framing changes and topological flops.

    Every L^{+-1} letter of the result is a flop (r = 1/2); framing letters
    only re-coordinatize the solid torus.
    """
    desc = as_descriptor(s)
    if not is_trivial_mod2(desc):
        raise DomainError(f"{desc} is not trivial mod 2 (c is odd)")
    return factor_h1(desc.matrix)


class LensHomology(NamedTuple):
    h1_order: int  # 0 means infinite cyclic
    h1_mod2_rank: int


def lens_space_h1(a: int, c: int) -> LensHomology:
    """H_1 of a/c surgery on the unknot: cyclic of order |a|."""
    if gcd(a, c) != 1:
        raise DomainError(f"({a},{c}) is not coprime")
    return LensHomology(abs(a), 0 if a % 2 else 1)


def mobius_boundary_class(a: int) -> TorusCurveClass:
    """Boundary class (a, 2) of the Mobius band (x, y) -> (y e^{iax/2}, e^{ix})."""
    if a % 2 == 0:
        raise DomainError(f"a = {a} is even; a Mobius band boundary needs a odd")
    return TorusCurveClass(a, 2)


def moebius_embeddable(d, a: int, b: int) -> bool:
    """Whether d = (alpha, beta) bounds a Mobius band over O(a) + O(b).

    Uses the (meridian, longitude) pairing with m.l = +1, so m.d = beta and
    |l.d| = |alpha|. The criterion: d not divisible by 2, m.d = +-2,
    |l.d| <= min(a, b).
    """
    if (a - b) % 2:
        raise DomainError(f"bundle degrees {a}, {b} differ in parity")
    alpha, beta = (d.a, d.b) if isinstance(d, TorusCurveClass) else d
    return abs(beta) == 2 and alpha % 2 == 1 and abs(alpha) <= min(a, b)
