"""Exact GL(2, Z) calculus for surgeries on solid tori and torus-bundle monodromies."""

from .core import (
    IDENTITY,
    TAU2,
    TAU3,
    DomainError,
    IntMat2,
    ParseError,
    SubgroupTag,
    classify,
    decompose_gl2,
    decompose_h2,
    inverse,
    k4_elements,
    k6_elements,
    membership,
    mul,
    parse_matrix,
)
from .oracle import GenerationReport, ReachSet, bfs_enumerate, verify_generation
from .planner import MonodromyPlan, PlanStep, compose_plans, k6_word, plan_monodromy, verify_plan
from .surgery import (
    SurgeryDescriptor,
    TorusCurveClass,
    change_framing,
    flop_decomposition,
    is_topological_flop,
    is_trivial_mod2,
    lens_space_h1,
    mobius_boundary_class,
    moebius_embeddable,
    normalize_to_h2,
    surgery_invariants,
)
from .words import L, U, Letter, Word, eval_word, factor_h1, factor_h2_transport, factor_h4

__version__ = "0.1.0"
