"""Plans realizing a torus-bundle monodromy M in GL(2, Z).

M splits as M1 @ M2 with M1 in K6 and M2 in H2. M1 is carried by one Del
Pezzo twist (a word in tau3, tau2); M2 is a product of quadric transforms,
each the parallel transport ((-1, 2n), (0, 1)) of the first ruling or
((1, 0), (2n, -1)) of the second, with n in {-1, 0, 1}. Steps are symbolic:
the only thing a step carries besides its tag is its matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import IDENTITY, DomainError, IntMat2, ParseError, decompose_gl2, k6_elements
from .words import Letter, Word, factor_h2_transport

TAU_LETTERS = (Letter("tau3"), Letter("tau2"))
RULINGS = ("first", "second")


@lru_cache(maxsize=None)
def _k6_words() -> dict[IntMat2, Word]:
    # breadth first over (tau3, tau2) in that order: shortest words, ties by letter order
    table = {IDENTITY: Word()}
    frontier = [Word()]
    while frontier:
        fresh = []
        for w in frontier:
            for g in TAU_LETTERS:
                nxt = Word(w.letters + (g,))
                x = nxt.evaluate()
                if x not in table:
                    table[x] = nxt
                    fresh.append(nxt)
        frontier = fresh
    assert set(table) == set(k6_elements())
    return table


def k6_word(k: IntMat2) -> Word:
    """Word of length <= 3 in tau3, tau2 evaluating to k."""
    try:
        return _k6_words()[k]
    except KeyError:
        raise DomainError(f"{k} is not in K6") from None


@dataclass(frozen=True, slots=True)
class PlanStep:
    kind: str  # "del_pezzo_twist" or "quadric_transform"
    word: Word = Word()
    ruling: str = "first"
    n: int = 0
    matrix: IntMat2 = field(init=False)

    def __post_init__(self):
        if self.kind == "del_pezzo_twist":
            if any(x.kind not in ("tau3", "tau2") for x in self.word):
                raise ValueError("a Del Pezzo twist is a word in tau3, tau2")
            value = self.word.evaluate()
        elif self.kind == "quadric_transform":
            if self.ruling not in RULINGS:
                raise ValueError(f"ruling must be one of {RULINGS}")
            if self.ruling == "first":
                value = IntMat2(-1, 2 * self.n, 0, 1)
            else:
                value = IntMat2(1, 0, 2 * self.n, -1)
        else:
            raise ValueError(f"unknown step kind {self.kind!r}")
        object.__setattr__(self, "matrix", value)

    @classmethod
    def twist(cls, word: Word) -> PlanStep:
        return cls("del_pezzo_twist", word=word)

    @classmethod
    def quadric(cls, ruling: str, n: int) -> PlanStep:
        return cls("quadric_transform", ruling=ruling, n=n)

    @property
    def parameters(self) -> dict:
        if self.kind == "del_pezzo_twist":
            return {"word": [str(x) for x in self.word]}
        return {"ruling": self.ruling, "n": self.n}

    def to_record(self) -> dict:
        return {"kind": self.kind, "parameters": self.parameters, "matrix": self.matrix.to_list()}

    @classmethod
    def from_record(cls, record: dict) -> PlanStep:
        try:
            kind, params = record["kind"], record["parameters"]
            if kind == "del_pezzo_twist":
                step = cls.twist(Word.parse(" ".join(params["word"])))
            else:
                step = cls(kind, ruling=params["ruling"], n=int(params["n"]))
            stated = IntMat2.from_rows(record["matrix"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad plan step {record!r}: {exc}") from None
        if stated != step.matrix:
            raise ParseError(f"step matrix {stated} does not match its kind ({step.matrix})")
        return step

    def __str__(self) -> str:
        if self.kind == "del_pezzo_twist":
            return f"DelPezzoTwist({' '.join(str(x) for x in self.word) or 'I'})"
        return f"QuadricTransform({self.ruling}, n={self.n})"


@dataclass(frozen=True, slots=True)
class MonodromyPlan:
    target: IntMat2
    steps: tuple[PlanStep, ...] = ()

    def product(self) -> IntMat2:
        result = IDENTITY
        for step in self.steps:
            result = result @ step.matrix
        return result

    def to_record(self) -> dict:
        return {"target": self.target.to_list(), "steps": [s.to_record() for s in self.steps]}

    @classmethod
    def from_record(cls, record: dict) -> MonodromyPlan:
        try:
            target = IntMat2.from_rows(record["target"])
            steps = tuple(PlanStep.from_record(s) for s in record["steps"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad plan record: {exc}") from None
        return cls(target, steps)


def verify_plan(plan: MonodromyPlan) -> bool:
    steps = plan.steps
    for i, step in enumerate(steps):
        if step.kind == "del_pezzo_twist" and i != 0:
            return False
        if step.kind == "quadric_transform" and step.n not in (-1, 0, 1):
            return False
    return plan.product() == plan.target


def plan_monodromy(m: IntMat2) -> MonodromyPlan:
    """An ordered plan whose step product, left to right, is m."""
    k, h = decompose_gl2(m)
    steps = []
    if k != IDENTITY:
        steps.append(PlanStep.twist(k6_word(k)))
    for x in factor_h2_transport(h):
        steps.append(PlanStep.quadric("first" if x.kind == "T" else "second", x.params[0]))
    plan = MonodromyPlan(m, tuple(steps))
    if not verify_plan(plan):
        raise AssertionError(f"plan for {m} does not verify")
    return plan


def compose_plans(first: MonodromyPlan, second: MonodromyPlan) -> MonodromyPlan:
    """A plan for first.target @ second.target.

    Steps are concatenated when the second plan has no twist. Otherwise its
    twist cannot stay in the middle, and the K6 parts are merged by planning
    the product afresh.
    """
    target = first.target @ second.target
    if any(s.kind == "del_pezzo_twist" for s in second.steps):
        return plan_monodromy(target)
    return MonodromyPlan(target, first.steps + second.steps)
