"""Brute-force Cayley graph search, the independent check on every
factorization and generation claim.

The search knows nothing about Euclidean reductions or congruence classes:
it multiplies letters breadth first and records, for each matrix, the first
(hence shortest, then lexicographically least) word reaching it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import IDENTITY, DomainError, IntMat2, ParseError, SubgroupTag, membership
from .words import Letter, Word, framing, matrix_letter, transport

NAMED_ALPHABETS: dict[str, tuple[Letter, ...]] = {
    "h4": (Letter("U"), Letter("L")),
    "h1": (framing(1), framing(0, -1, 1), framing(0, 1, -1), Letter("L")),
    # the generators of H2 listed with the global quadric construction
    "h2": (
        transport(0),
        transport(1),
        transport(-1),
        transport(0, True),
        Letter("L"),
        Letter("L", (), -1),
    ),
    "transport": tuple(transport(n, r) for r in (False, True) for n in (-1, 0, 1)),
    "k6": (Letter("tau3"), Letter("tau2")),
}


def _as_letter(x) -> Letter:
    return x if isinstance(x, Letter) else matrix_letter(x)


def close_under_inverses(alphabet) -> tuple[Letter, ...]:
    """The alphabet followed by inverses of letters whose inverse is missing."""
    letters = [_as_letter(x) for x in alphabet]
    seen = {x.matrix for x in letters}
    for x in list(letters):
        inv = x.inverse()
        if inv.matrix not in seen:
            letters.append(inv)
            seen.add(inv.matrix)
    return tuple(letters)


@dataclass
class ReachSet:
    alphabet: tuple[Letter, ...]
    depth: int
    words: dict[IntMat2, Word] = field(default_factory=dict)

    def __contains__(self, x: IntMat2) -> bool:
        return x in self.words

    def __len__(self) -> int:
        return len(self.words)

    def matrices(self):
        return self.words.keys()

    def word_length(self, x: IntMat2) -> int:
        return len(self.words[x])


def bfs_enumerate(alphabet, depth: int) -> ReachSet:
    """All products of at most ``depth`` letters (inverses included)."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    letters = close_under_inverses(alphabet)
    mats = [x.matrix for x in letters]
    reach = ReachSet(letters, depth, {IDENTITY: Word()})
    frontier = [(IDENTITY, Word())]
    for _ in range(depth):
        fresh = []
        # frontier stays in lexicographic word order, so first discovery wins ties
        for x, w in frontier:
            for letter, g in zip(letters, mats):
                y = x @ g
                if y not in reach.words:
                    nw = Word(w.letters + (letter,))
                    reach.words[y] = nw
                    fresh.append((y, nw))
        if not fresh:
            break
        frontier = fresh
    return reach


def bounded_matrices(bound: int):
    """Every matrix of GL(2, Z) with all entries in [-bound, bound]."""
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                if a == 0:
                    if abs(b * c) == 1:
                        for d in rng:
                            yield IntMat2(a, b, c, d)
                    continue
                for det in (1, -1):
                    num = det + b * c
                    if num % a == 0 and abs(num // a) <= bound:
                        yield IntMat2(a, b, c, num // a)


@dataclass
class GenerationReport:
    reached: int
    violations: list[IntMat2]
    gaps: list[IntMat2]

    def to_record(self) -> dict:
        return {
            "reached": self.reached,
            "violations": [x.to_list() for x in self.violations],
            "gaps": [x.to_list() for x in self.gaps],
        }

    def summary(self) -> str:
        return (
            f"reached {self.reached} matrices; "
            f"{len(self.violations)} soundness violations; "
            f"{len(self.gaps)} gaps within the entry bound"
        )


def verify_generation(alphabet, tag, entry_bound: int = 50, depth: int = 8) -> GenerationReport:
    """Compare what the alphabet reaches with the subgroup ``tag``.

    Violations are reached matrices outside the subgroup. Gaps are subgroup
    members with entries bounded by ``entry_bound`` that were not reached at
    this depth; they are not refutations.
    """
    tag = SubgroupTag(tag)
    reach = bfs_enumerate(alphabet, depth)
    violations = [x for x in reach.matrices() if not membership(x, tag)]
    gaps = [x for x in bounded_matrices(entry_bound) if membership(x, tag) and x not in reach]
    return GenerationReport(len(reach), violations, gaps)


def load_alphabet(spec: str) -> tuple[Letter, ...]:
    """A named alphabet, or a JSON file holding a list of 2x2 integer arrays."""
    if spec in NAMED_ALPHABETS:
        return NAMED_ALPHABETS[spec]
    path = Path(spec)
    if not path.exists():
        raise ParseError(f"{spec!r} is neither a named alphabet {sorted(NAMED_ALPHABETS)} nor a file")
    try:
        rows = json.loads(path.read_text())
        return tuple(matrix_letter(IntMat2.from_rows(r)) for r in rows)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, (ParseError, DomainError)):
            raise
        raise ParseError(f"cannot read alphabet from {spec}: {exc}") from None

