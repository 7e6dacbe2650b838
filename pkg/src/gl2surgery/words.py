"""Generator letters, words, and constructive factorizations.

Three factorizations are provided, each a Euclidean reduction whose output
re-evaluates exactly to its input:

* ``factor_h4``: H4 over U = ((1,2),(0,1)) and L = ((1,0),(2,1)).
* ``factor_h1``: H1 over framing matrices ((+-1, m),(0, +-1)) and L.
* ``factor_h2_transport``: H2 over the quadric parallel-transport matrices
  T(n) = ((-1, 2n),(0, 1)) and T'(n) = ((1, 0),(2n, -1)) with n in {-1, 0, 1}.

Words are not shortest in general; ``oracle.bfs_enumerate`` finds geodesics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    IDENTITY,
    TAU2,
    TAU3,
    DomainError,
    IntMat2,
    ParseError,
    SubgroupTag,
    decompose_h2,
    membership,
)

U = IntMat2(1, 2, 0, 1)
L = IntMat2(1, 0, 2, 1)

_ARITY = {"U": 0, "L": 0, "F": 3, "T": 1, "T'": 1, "tau3": 0, "tau2": 0, "M": 4}


@dataclass(frozen=True, slots=True)
class Letter:
    kind: str
    params: tuple[int, ...] = ()
    exponent: int = 1

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if len(self.params) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} parameters")
        if self.exponent == 0:
            raise ValueError("letter exponent must be nonzero")
        if self.kind == "F" and (abs(self.params[1]) != 1 or abs(self.params[2]) != 1):
            raise ValueError("framing signs must be +1 or -1")
        if self.kind == "M" and not self.base.is_unimodular():
            raise DomainError(f"matrix letter {self.base} has determinant {self.base.det}")

    @property
    def base(self) -> IntMat2:
        kind, p = self.kind, self.params
        if kind == "U":
            return U
        if kind == "L":
            return L
        if kind == "F":
            m, s1, s2 = p
            return IntMat2(s1, m, 0, s2)
        if kind == "T":
            return IntMat2(-1, 2 * p[0], 0, 1)
        if kind == "T'":
            return IntMat2(1, 0, 2 * p[0], -1)
        if kind == "tau3":
            return TAU3
        if kind == "tau2":
            return TAU2
        return IntMat2(*p)

    @property
    def matrix(self) -> IntMat2:
        return self.base ** self.exponent

    def inverse(self) -> Letter:
        return Letter(self.kind, self.params, -self.exponent)

    def __str__(self) -> str:
        head = self.kind
        if self.params:
            head += "(" + ",".join(str(x) for x in self.params) + ")"
        if self.exponent != 1:
            head += f"^{self.exponent}"
        return head

    def to_record(self) -> dict:
        return {"letter": self.kind, "exponent": self.exponent, "parameters": list(self.params)}

    @classmethod
    def from_record(cls, record: dict) -> Letter:
        try:
            return cls(
                record["letter"],
                tuple(int(x) for x in record.get("parameters", ())),
                int(record.get("exponent", 1)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad letter record {record!r}: {exc}") from None


def framing(m: int, s1: int = 1, s2: int = 1) -> Letter:
    return Letter("F", (m, s1, s2))


def transport(n: int, second_ruling: bool = False) -> Letter:
    return Letter("T'" if second_ruling else "T", (n,))


def matrix_letter(x: IntMat2) -> Letter:
    return Letter("M", x.key())


_LETTER_RE = re.compile(r"^(U|L|F|T'|T|tau3|tau2|M)(?:\(([^)]*)\))?(?:\^([+-]?\d+))?$")


def parse_letter(token: str) -> Letter:
    match = _LETTER_RE.match(token)
    if match is None:
        raise ParseError(f"cannot parse letter {token!r}")
    kind, args, exp = match.groups()
    try:
        params = tuple(int(x) for x in args.split(",")) if args else ()
        return Letter(kind, params, int(exp) if exp else 1)
    except ValueError as exc:
        raise ParseError(f"cannot parse letter {token!r}: {exc}") from None


@dataclass(frozen=True, slots=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def evaluate(self) -> IntMat2:
        result = IDENTITY
        for letter in self.letters:
            result = result @ letter.matrix
        return result

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    @classmethod
    def parse(cls, text: str) -> Word:
        return cls(tuple(parse_letter(tok) for tok in text.split()))

    def to_records(self) -> list[dict]:
        return [x.to_record() for x in self.letters]

    @classmethod
    def from_records(cls, records) -> Word:
        return cls(tuple(Letter.from_record(r) for r in records))


def eval_word(word) -> IntMat2:
    """Left-to-right product of the letters; the empty word gives I."""
    if not isinstance(word, Word):
        word = Word(tuple(word))
    return word.evaluate()


def free_reduce(letters) -> Word:
    """Cancel adjacent equal-kind letters whose product is the identity."""
    stack: list[Letter] = []
    for x in letters:
        if stack:
            top = stack[-1]
            if top.kind == x.kind and top.params == x.params and top.matrix @ x.matrix == IDENTITY:
                stack.pop()
                continue
        stack.append(x)
    return Word(tuple(stack))


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


def h4_euclid_trace(m: IntMat2) -> tuple[list[tuple[int, int]], list[Letter]]:
    """Run the first-row Euclidean reduction of an H4 matrix.

    Returns the successive first rows (a, b) and the letters applied on the
    right. Each step lowers max(|a|, |b|); the last row is (1, 0).
    """
    if not membership(m, SubgroupTag.H4):
        raise DomainError(f"{m} is not in H4")
    a, b = m.a, m.b
    rows = [(a, b)]
    moves: list[Letter] = []
    # a odd and b even, so |a| != |b| and only one move shrinks the row
    while b != 0:
        s = _sign(a) * _sign(b)
        if abs(b) > abs(a):
            b -= 2 * s * a
            moves.append(Letter("U", (), -s))
        else:
            a -= 2 * s * b
            moves.append(Letter("L", (), -s))
        rows.append((a, b))
    return rows, moves


def factor_h4(m: IntMat2) -> Word:
    """Write an H4 matrix as a word in U^{+-1}, L^{+-1}."""
    _, moves = h4_euclid_trace(m)
    residual = m
    for x in moves:
        residual = residual @ x.matrix
    # first row is (1, 0) and det = 1, so residual = L^k
    k = residual.c // 2
    letters = [Letter("L", (), _sign(k))] * abs(k)
    letters += [x.inverse() for x in reversed(moves)]
    return free_reduce(letters)


def _nearest_quotient(a: int, c: int) -> int:
    q, r = divmod(a, c)
    if 2 * abs(r) > abs(c):
        q += 1
    return q


def factor_h1(m: IntMat2) -> Word:
    """Write an H1 matrix as framing letters interleaved with L^{+-1}.

    Reduces the first column (a, c) by left multiplication: L^{+-1} adds
    +-2a to c, a framing letter ((1, q),(0, 1)) adds q*c to a. When c reaches
    0 what is left is a single framing matrix.
    """
    if not membership(m, SubgroupTag.H1):
        raise DomainError(f"{m} is not in H1")
    work = m
    undo: list[Letter] = []
    while work.c != 0:
        a, c = work.a, work.c
        if abs(c) > abs(a):
            s = _sign(a) * _sign(c)
            step = Letter("L", (), -s)
        else:
            step = framing(-_nearest_quotient(a, c))
        work = step.matrix @ work
        undo.append(_framing_of(step.matrix.inverse()) if step.kind == "F" else step.inverse())
    # work = ((s1, x),(0, s2)) and m = undo[0] ... undo[-1] @ work
    return _merge_framings(undo + [_framing_of(work)])


def _framing_of(x: IntMat2) -> Letter:
    return framing(x.b, x.a, x.d)


def _merge_framings(letters) -> Word:
    out: list[Letter] = []
    for x in letters:
        if x.kind == "F" and out and out[-1].kind == "F":
            x = _framing_of(out.pop().matrix @ x.matrix)
        if x.kind == "F" and x.matrix == IDENTITY:
            continue
        out.append(x)
    # removing identity framings can make L and L^-1 adjacent
    reduced = free_reduce(out)
    if reduced.letters != tuple(out):
        return _merge_framings(reduced.letters)
    return reduced


TRANSPORT_LETTERS = tuple(transport(n, second) for second in (False, True) for n in (-1, 0, 1))

# U^e = T(e) T(0) and L^e = T'(e) T'(0); with T'(0) on the left the sign of e flips
_H4_TO_TRANSPORT = {
    ("U", 1): (transport(1), transport(0)),
    ("U", -1): (transport(-1), transport(0)),
    ("L", 1): (transport(1, True), transport(0, True)),
    ("L", -1): (transport(-1, True), transport(0, True)),
}

_K4_TO_TRANSPORT = {
    (1, 1): (),
    (-1, 1): (transport(0),),
    (1, -1): (transport(0, True),),
    (-1, -1): (transport(0), transport(0, True)),
}


def _simplify_transports(letters) -> Word:
    # every transport is an involution, and T(0) T(n) T(0) = T(-n)
    stack: list[Letter] = []
    for x in letters:
        stack.append(x)
        while True:
            if len(stack) >= 2 and stack[-1] == stack[-2]:
                del stack[-2:]
                continue
            if len(stack) >= 3:
                p, q, r = stack[-3:]
                if p == r and p.params == (0,) and q.kind == p.kind and q.params != (0,):
                    del stack[-3:]
                    stack.append(Letter(q.kind, (-q.params[0],)))
                    continue
            break
    return Word(tuple(stack))


def factor_h2_transport(m: IntMat2) -> Word:
    """Write an H2 matrix as a product of T(n), T'(n) with n in {-1, 0, 1}.

    T(0) = diag(-1, 1) and T'(0) = diag(1, -1) carry the K4 sign; the H4 part
    is factored over U, L and each letter is rewritten as two transports.
    """
    k, h = decompose_h2(m)
    letters = list(_K4_TO_TRANSPORT[(k.a, k.d)])
    for x in factor_h4(h):
        letters.extend(_H4_TO_TRANSPORT[(x.kind, x.exponent)])
    return _simplify_transports(letters)
