"""Command-line driver.

Input files are read by extension: ``.dfl`` for defeasible theories and
``.lp`` for normal programs. A bare fixture name such as ``fix_nixon.dfl``
or ``nixon.dfl`` that does not exist on disk is looked up among the
fixtures shipped with the package.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures, report
from .core import DefeasibleTheory, NormalProgram, sorted_lits, validate_theory
from .corpus import TheoryShape, plain, theory_corpus
from .dl_semantics import wfm_dl
from .errors import BudgetExhausted, CapExceeded, ParseError, PreconditionError, ValidationError
from .lp_semantics import DEFAULT_CAP, stable_models_lp, wfm_lp
from .operators import Operator, refutes_stable, stable_sets, wfm_alpha, wfm_beta, x_limit
from .proof import DEFAULT_BUDGET, Prover, parse_goal
from .syntax import parse_program, parse_theory, serialize_program, serialize_theory
from .transform import (
    close_conflicts,
    dl_to_lp,
    eliminate_defeaters_priorities,
    encode_negative_atoms,
    explicit_version,
    lp_to_dl,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_BUDGET = 4


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _resolve(path: str) -> tuple[str, str]:
    p = Path(path)
    suffix = p.suffix.lstrip(".")
    if suffix not in ("dfl", "lp"):
        raise _Usage(f"{path}: expected a .dfl theory or a .lp program")
    if p.exists():
        return p.read_text(encoding="utf-8"), suffix
    stem = p.stem if p.stem.startswith("fix_") else f"fix_{p.stem}"
    known = fixtures.THEORIES if suffix == "dfl" else fixtures.PROGRAMS
    if p.parent == Path(".") and stem in known:
        return fixtures.source(stem, suffix), suffix
    raise _Usage(f"{path}: no such file")


def _load(path: str, validate: bool = True):
    text, suffix = _resolve(path)
    if suffix == "dfl":
        return parse_theory(text, validate=validate)
    return parse_program(text)


def _theory(path: str) -> DefeasibleTheory:
    obj = _load(path)
    if not isinstance(obj, DefeasibleTheory):
        raise _Usage(f"{path}: this command needs a .dfl theory")
    return obj


def _emit(args, record: dict) -> None:
    out = report.render_json(record) if getattr(args, "json", False) else report.render_text(record)
    sys.stdout.write(out)


def _plotted(path) -> None:
    print(f"figure written to {path}", file=sys.stderr)


def cmd_wfm(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, NormalProgram):
        if args.logic not in (None, "wfs"):
            raise _Usage(f"--logic {args.logic} needs a .dfl theory; programs use wfs")
        logic, universe = "wfs", obj.literals
        model = wfm_lp(obj)
    else:
        logic = args.logic or "ndl"
        universe = obj.literals
        if logic == "wfs":
            model = wfm_lp(dl_to_lp(obj), universe)
        elif logic == "alpha":
            model = wfm_alpha(obj)
        elif logic == "beta":
            model = wfm_beta(obj)
        else:
            model = wfm_dl(obj, logic)
    record = {"logic": logic, **report.model_record(model, universe)}
    _emit(args, record)
    if args.plot:
        report.plot_status(model, universe, args.plot, title=f"{Path(args.file).stem} ({logic})")
        _plotted(args.plot)
    return EXIT_OK


def cmd_translate(args) -> int:
    obj = _load(args.file)
    d = args.direction
    if d in ("dl2lp", "compile", "close-conflicts"):
        if not isinstance(obj, DefeasibleTheory):
            raise _Usage(f"--direction {d} needs a .dfl theory")
        if d == "dl2lp":
            sys.stdout.write(serialize_program(dl_to_lp(obj, cap=args.cap)))
        elif d == "compile":
            sys.stdout.write(serialize_theory(eliminate_defeaters_priorities(obj, cap=args.cap)))
        else:
            sys.stdout.write(serialize_theory(close_conflicts(obj)))
        return EXIT_OK
    if not isinstance(obj, NormalProgram):
        raise _Usage(f"--direction {d} needs a .lp program")
    if not obj.is_positive:
        obj = encode_negative_atoms(obj)
        sys.stdout.write("% classically negated atoms -a are renamed a__neg\n")
    if d == "lp2dl":
        sys.stdout.write(serialize_theory(lp_to_dl(obj)))
    else:
        sys.stdout.write(serialize_program(explicit_version(obj)))
    return EXIT_OK


def cmd_stable(args) -> int:
    obj = _load(args.file)
    op = args.operator
    if isinstance(obj, NormalProgram):
        if op != "gl":
            raise _Usage(f"--operator {op} needs a .dfl theory; programs use gl")
        sets, universe = stable_models_lp(obj, cap=args.cap), obj.literals
    elif op == "gl":
        program = dl_to_lp(obj)
        sets, universe = stable_models_lp(program, cap=args.cap), program.literals
    else:
        sets, universe = stable_sets(obj, op, cap=args.cap), obj.literals
    _emit(args, {"operator": op, **report.stable_record(sets)})
    if args.plot:
        report.plot_stable(sets, universe, args.plot, title=f"{Path(args.file).stem} ({op})")
        _plotted(args.plot)
    return EXIT_OK


def cmd_prove(args) -> int:
    theory = _theory(args.file)
    sign, p = parse_goal(args.goal)
    prover = Prover(theory, args.logic, budget=args.budget)
    tree = prover.prove((sign, p))
    if args.json:
        record = {"goal": f"{sign}{p}", "logic": args.logic, "proved": tree is not None,
                  "tree": tree.to_dict() if tree else None}
        sys.stdout.write(report.render_json(record))
    elif tree is None:
        print(f"no proof of {sign}{p} under {args.logic}")
    else:
        print(tree.to_text())
    return EXIT_OK


def cmd_fixpoint(args) -> int:
    theory = _theory(args.file)
    limit, trace = x_limit(theory, args.operator)
    rows = [[str(q) for q in sorted_lits(S)] for S in trace]
    _emit(args, {"operator": args.operator, "limit": [str(q) for q in sorted_lits(limit)], "trace": rows})
    if args.plot:
        report.plot_trace(trace, args.plot, title=f"{Path(args.file).stem} ({args.operator})")
        _plotted(args.plot)
    return EXIT_OK


def cmd_check(args) -> int:
    obj = _load(args.file, validate=False)
    if isinstance(obj, NormalProgram):
        print(f"ok: {len(obj.rules)} rules over {len(obj.literals)} literals")
        return EXIT_OK
    problems = validate_theory(obj)
    if problems:
        for line in problems:
            print(f"violation: {line}")
        return EXIT_INVALID
    print(f"ok: {len(obj.rules)} rules, {len(obj.conflicts)} conflict sets, {len(obj.priority)} priority pairs")
    return EXIT_OK


def scan_open_question(count: int, seed: int, atoms: int, cap: int = DEFAULT_CAP) -> dict:
    """Look for literals refuted by every alpha-stable set but not by every beta-stable set.

    Theories without alpha-stable sets refute everything vacuously; they are
    counted apart from the genuine hits.
    """
    shape = TheoryShape(atoms=atoms, defeaters=False, priorities=False)
    genuine, vacuous, checked = [], 0, 0
    for theory in theory_corpus(count, seed, shape):
        theory = plain(theory)
        a_sets = stable_sets(theory, Operator.ALPHA, cap)
        b_sets = stable_sets(theory, Operator.BETA, cap)
        checked += 1
        for p in sorted_lits(theory.literals):
            if refutes_stable(theory, "alpha", p, a_sets) and not refutes_stable(theory, "beta", p, b_sets):
                if not a_sets:
                    vacuous += 1
                else:
                    genuine.append({"literal": str(p), "theory": serialize_theory(theory)})
    return {"theories": checked, "vacuous": vacuous, "counterexamples": genuine}


def cmd_scan(args) -> int:
    found = scan_open_question(args.count, args.seed, args.atoms, args.cap)
    if args.json:
        sys.stdout.write(report.render_json(found))
        return EXIT_OK
    print(f"theories: {found['theories']}")
    print(f"vacuous: {found['vacuous']}")
    print(f"counterexamples: {len(found['counterexamples'])}")
    for hit in found["counterexamples"][: args.show]:
        print(f"% refuted under alpha but not beta: {hit['literal']}")
        sys.stdout.write(hit["theory"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="defeasible", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, file=True):
        p = sub.add_parser(name, help=help_)
        if file:
            p.add_argument("file", help=".dfl theory or .lp program")
        p.set_defaults(func=func)
        return p

    p = add("wfm", cmd_wfm, "well-founded model")
    p.add_argument("--logic", choices=["ndl", "adl", "wfs", "alpha", "beta"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH")

    p = add("translate", cmd_translate, "translate between theories and programs")
    p.add_argument("--direction", required=True,
                   choices=["dl2lp", "lp2dl", "explicit", "compile", "close-conflicts"])
    p.add_argument("--cap", type=int, default=100_000, help="bound on conflict-set products")

    p = add("stable", cmd_stable, "stable models or stable sets")
    p.add_argument("--operator", choices=["alpha", "beta", "gl"], default="gl")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest literal universe to enumerate")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH")

    p = add("prove", cmd_prove, "search for an argument tree")
    p.add_argument("--logic", choices=["ndl", "adl"], default="ndl")
    p.add_argument("--goal", required=True, help="+lit to prove, -lit to refute")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")

    p = add("fixpoint", cmd_fixpoint, "trace of the squared operator from the empty set")
    p.add_argument("--operator", choices=["alpha", "beta"], default="beta")
    p.add_argument("--json", action="store_true")
    p.add_argument("--plot", metavar="PATH")

    add("check", cmd_check, "validate a theory or program")

    p = add("scan-open-question", cmd_scan, "hunt for alpha-refuted, beta-unrefuted literals", file=False)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--atoms", type=int, default=3)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--show", type=int, default=3, help="counterexamples to print")
    p.add_argument("--json", action="store_true")
    return parser


def _glue_goal(argv):
    # "--goal -p" would otherwise be read as an unknown option
    argv = list(sys.argv[1:] if argv is None else argv)
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--goal" and i + 1 < len(argv):
            out.append(f"--goal={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(_glue_goal(argv))
        return args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        for line in exc.violations:
            print(f"violation: {line}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
