"""Command-line front end. Every command is a thin wrapper over a library call.

Exit codes: 0 success, 1 domain error (input outside the required subgroup,
or a plan that fails verification), 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .core import DomainError, IntMat2, ParseError, SubgroupTag, classify, decompose_gl2, decompose_h2, parse_matrix
from .oracle import NAMED_ALPHABETS, load_alphabet, verify_generation
from .planner import MonodromyPlan, plan_monodromy, verify_plan
from .surgery import (
    SurgeryDescriptor,
    flop_decomposition,
    is_topological_flop,
    is_trivial_mod2,
    lens_space_h1,
    moebius_embeddable,
    surgery_invariants,
)
from .words import factor_h1, factor_h2_transport, factor_h4

FACTORIZERS = {"h4": factor_h4, "h1": factor_h1, "h2t": factor_h2_transport}
DEFAULT_TAGS = {"h4": "H4", "h1": "H1", "h2": "H2", "transport": "H2", "k6": "K6"}

# "-1,0;0,1" would otherwise be taken for an option
_NEGATIVE_LIST = re.compile(r"^-\d+\s*[,;]")


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


def _matrix(text: str) -> IntMat2:
    return parse_matrix(text)


def _word_record(word) -> dict:
    return {"word": word.to_records(), "text": str(word)}


def cmd_classify(args):
    m = _matrix(args.matrix)
    record = {"matrix": m.to_list(), "det": m.det, "membership": classify(m)}
    lines = [f"{tag}: {'yes' if v else 'no'}" for tag, v in record["membership"].items()]
    return record, lines


def cmd_decompose(args):
    m = _matrix(args.matrix)
    k, h = decompose_gl2(m) if args.level == "gl2" else decompose_h2(m)
    return {"level": args.level, "k": k.to_list(), "h": h.to_list()}, [f"k = {k}", f"h = {h}"]


def cmd_factor(args):
    word = FACTORIZERS[args.alphabet](_matrix(args.matrix))
    return _word_record(word), [str(word) or "(empty word)"]


def cmd_surgery(args):
    s = SurgeryDescriptor(_matrix(args.matrix))
    record = surgery_invariants(s).to_record()
    record["trivial_mod2"] = is_trivial_mod2(s)
    record["topological_flop"] = is_topological_flop(s)
    return record, [f"{k}: {record[k]}" for k in ("c", "r", "trivial_mod2", "topological_flop")]


def cmd_flops(args):
    word = flop_decomposition(SurgeryDescriptor(_matrix(args.matrix)))
    record = _word_record(word)
    record["flops"] = sum(1 for x in word if x.kind == "L")
    return record, [str(word) or "(empty word)", f"flops: {record['flops']}"]


def cmd_lens(args):
    h = lens_space_h1(args.a, args.c)
    record = {"h1_order": h.h1_order, "h1_mod2_rank": h.h1_mod2_rank}
    order = "infinite" if h.h1_order == 0 else h.h1_order
    return record, [f"h1_order: {order}", f"h1_mod2_rank: {h.h1_mod2_rank}"]


def cmd_moebius(args):
    try:
        alpha, beta = (int(x) for x in args.curve.split(","))
    except ValueError:
        raise ParseError(f"expected a class as 'alpha,beta', got {args.curve!r}") from None
    a, b = args.bundle
    verdict = moebius_embeddable((alpha, beta), a, b)
    return {"class": [alpha, beta], "bundle": [a, b], "embeddable": verdict}, [f"embeddable: {verdict}"]


def cmd_plan(args):
    plan = plan_monodromy(_matrix(args.matrix))
    lines = [f"target = {plan.target}"] + [f"{i}: {s}  [{s.matrix}]" for i, s in enumerate(plan.steps)]
    return plan.to_record(), lines


def cmd_verify_plan(args):
    try:
        record = json.loads(Path(args.file).read_text())
    except (OSError, ValueError) as exc:
        raise ParseError(f"cannot read plan file {args.file}: {exc}") from None
    plan = MonodromyPlan.from_record(record)
    ok = verify_plan(plan)
    return {"valid": ok, "steps": len(plan.steps)}, [f"valid: {ok}"]


def cmd_oracle(args):
    alphabet = load_alphabet(args.alphabet)
    tag = args.tag or DEFAULT_TAGS.get(args.alphabet, "GL2Z")
    report = verify_generation(alphabet, tag, args.bound, args.depth)
    record = report.to_record()
    record["tag"] = tag
    record["depth"] = args.depth
    record["bound"] = args.bound
    lines = [report.summary()]
    lines += [f"violation: {x}" for x in report.violations]
    lines += [f"gap: {x}" for x in report.gaps]
    return record, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gl2surgery", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one machine-readable record")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "subgroup membership vector").add_argument("matrix")
    p = add("decompose", cmd_decompose, "K6 x H2 or K4 x H4 splitting")
    p.add_argument("--level", choices=("gl2", "h2"), default="gl2")
    p.add_argument("matrix")
    p = add("factor", cmd_factor, "generator word for a subgroup element")
    p.add_argument("--alphabet", choices=sorted(FACTORIZERS), required=True)
    p.add_argument("matrix")
    add("surgery", cmd_surgery, "surgery invariants c and r").add_argument("matrix")
    add("flops", cmd_flops, "decompose a mod-2-trivial surgery into flops").add_argument("matrix")
    p = add("lens", cmd_lens, "H_1 of a/c surgery on the unknot")
    p.add_argument("a", type=int)
    p.add_argument("c", type=int)
    p = add("moebius", cmd_moebius, "Mobius band boundary criterion")
    p.add_argument("--class", dest="curve", required=True, metavar="ALPHA,BETA")
    p.add_argument("--bundle", nargs=2, type=int, required=True, metavar=("A", "B"))
    add("plan", cmd_plan, "monodromy plan for a GL(2,Z) matrix").add_argument("matrix")
    add("verify-plan", cmd_verify_plan, "check a serialized plan").add_argument("file")
    p = add("oracle", cmd_oracle, "breadth-first generation report")
    p.add_argument("--alphabet", required=True, help=f"one of {sorted(NAMED_ALPHABETS)} or a JSON file")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--tag", choices=[t.value for t in SubgroupTag])
    return parser


def _protect_negative(argv):
    return [" " + a if _NEGATIVE_LIST.match(a) else a for a in argv]


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record, lines = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.json:
        print(dumps(record), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    if args.command == "verify-plan" and not record["valid"]:
        return 1
    return 0


def main() -> int:
    return run()
