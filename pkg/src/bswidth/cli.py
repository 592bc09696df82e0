"""Command-line front end.

Subcommands: report, check-p, bott, lattice, selftest.  Exit codes: 0 on
success, 1 on input errors (including usage and cap overruns), 2 on internal
invariant violations.  All numeric output is exact; rationals render as
"p/q" in lowest terms.  JSON output is byte-identical across runs for
identical inputs and seeds; the text renderer is a view of the same values.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import selftest as selftest_mod
from .bott import (
    BottCollection,
    DivisorClass,
    build_fan,
    caseline_width,
    check_smooth,
    degenerate_bott_tower,
    primitive_relations,
    toric_width,
)
from .bscurve import BSInput, gromov_width
from .errors import CapExceeded, InputError, InvariantViolation
from .gkpoly import GKChain, build_chain, check_condition_p, iter_lattice_points
from .render import parse_q, q_str
from .rootsys import build_root_system
from .words import betas

SCHEMA = "bswidth/1"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; 2 is reserved for
    invariant violations here, so remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _split_ints(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _split_rationals(text: str) -> list[Fraction]:
    if not text.strip():
        return []
    return [parse_q(p.strip()) for p in text.split(",")]


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def _job_input(args) -> tuple[str, BSInput]:
    """Resolve --type/--word/--m flags or an --input JSON job file."""
    if args.input:
        job = _load_json(args.input)
        type_str = job.get("type")
        word = job.get("word")
        m = job.get("m")
        if type_str is None or word is None or m is None:
            raise InputError('job file needs "type", "word" and "m"')
        m_vals = [parse_q(x) for x in m]
    else:
        if not (args.type and args.word is not None and args.m is not None):
            raise InputError("provide --type, --word and --m (or --input file.json)")
        type_str = args.type
        word = _split_ints(args.word)
        m_vals = _split_rationals(args.m)
    if not isinstance(word, list) or not all(isinstance(x, int) for x in word):
        raise InputError("word must be a list of integers")
    rs = build_root_system(type_str)
    return str(type_str), BSInput(rs, tuple(word), tuple(m_vals))


def _chain_jsonable(chain: GKChain) -> dict:
    return {
        "r": chain.r,
        "bounds": [
            {"k": k, "constant": q_str(f.constant),
             "coeffs": {str(v): q_str(c) for v, c in zip(f.variables, f.coeffs)}}
            for k, f in enumerate(chain.forms, start=1)
        ],
    }


def _condition_p_jsonable(report) -> dict:
    return {
        "holds": report.holds,
        "minima": [
            {"k": k, "min": q_str(val), "point": [q_str(x) for x in pt]}
            for k, val, pt in report.minima
        ],
        "witness": None if report.witness is None else {
            "k": report.witness.k,
            "point": [q_str(x) for x in report.witness.point],
            "value": q_str(report.witness.value),
        },
        "not_evaluated": list(report.not_evaluated),
    }


def build_report(type_str: str, inp: BSInput, force_degeneration: bool = False) -> dict:
    seq = betas(inp.rs, inp.word)
    curve = gromov_width(inp)  # hard-fails if the two width minima disagree
    chain = build_chain(inp)
    p_report = check_condition_p(chain)
    case = min(
        inp.m[j - 1] for j in range(1, inp.r + 1)
        if all(inp.rs.cartan[inp.word[j - 1] - 1][inp.word[k - 1] - 1] == 0
               for k in range(j + 1, inp.r + 1)))

    antican2 = frozenset(j for j, d in enumerate(curve.antican, start=1) if d == 2)
    checks = {
        "minimal_min_equals_global_min": True,  # asserted inside gromov_width
        "minimal_equals_antican2": curve.minimal_set == antican2,
        "lines_subset_minimal": curve.line_set <= curve.minimal_set,
        "width_le_caseline": curve.width <= case,
        "width_equals_caseline": None,
        "width_equals_toric": None,
    }

    warnings: list[str] = []
    degeneration = None
    if p_report.holds or force_degeneration:
        tower, divisor = degenerate_bott_tower(inp, force=force_degeneration)
        tw, stage = toric_width(tower, divisor)
        degeneration = {
            "dims": list(tower.dims),
            "a": {f"{j},{l},{k}": a for j, l, k, a in tower.twists},
            "divisor": [q_str(x) for x in divisor.coeffs],
            "toric_width": q_str(tw),
            "toric_stage": stage,
            "p_violated": not p_report.holds,
        }
        checks["width_equals_caseline"] = curve.width == case
        checks["width_equals_toric"] = curve.width == tw
        if not p_report.holds:
            warnings.append("hypothesis (P) violated: degeneration forced, "
                            "width equalities not guaranteed")
    if p_report.holds:
        if not (checks["width_equals_caseline"] and checks["width_equals_toric"]):
            raise InvariantViolation(
                "width routes disagree under condition (P): "
                f"curve {q_str(curve.width)}, line {q_str(case)}, "
                f"toric {degeneration['toric_width']}")
        caseline_width(inp)  # runs the module's own assertion path as well
    for name in ("minimal_equals_antican2", "lines_subset_minimal", "width_le_caseline"):
        if not checks[name]:
            raise InvariantViolation(f"cross-check {name} failed")

    return {
        "schema": SCHEMA,
        "command": "report",
        "input": {"type": type_str, "word": list(inp.word),
                  "m": [q_str(x) for x in inp.m]},
        "rank": inp.rs.rank,
        "reduced": True,
        "betas": [list(b.coords) for b in seq.roots],
        "beta_coroots": [list(b.coords) for b in seq.coroots],
        "deg": [list(row) for row in curve.deg],
        "areas": [q_str(x) for x in curve.areas],
        "antican": list(curve.antican),
        "minimal": sorted(curve.minimal_set),
        "lines": sorted(curve.line_set),
        "width": q_str(curve.width),
        "witness": curve.witness,
        "condition_p": _condition_p_jsonable(p_report),
        "caseline": q_str(case),
        "degeneration": degeneration,
        "checks": checks,
        "warnings": warnings,
    }


def _deg_table(deg: list[list[int]]) -> str:
    r = len(deg)
    width = max(2, max((len(str(v)) for row in deg for v in row), default=1))
    head = "  k\\j " + "".join(f"{j:>{width + 1}}" for j in range(1, r + 1))
    lines = [head, "  " + "-" * (len(head) - 2)]
    for k in range(1, r + 1):
        cells = "".join(
            f"{deg[k - 1][j - 1] if deg[k - 1][j - 1] or j <= k else '.':>{width + 1}}"
            for j in range(1, r + 1))
        lines.append(f"  {k:>3} {cells}")
    return "\n".join(lines)


def _render_report_text(rep: dict) -> str:
    inp = rep["input"]
    out = [
        f"type {inp['type']}, word ({', '.join(map(str, inp['word']))}), "
        f"m = ({', '.join(inp['m'])})",
        f"rank {rep['rank']}, length {len(inp['word'])}, reduced: yes",
        f"betas (root coords):   {' '.join(str(tuple(b)) for b in rep['betas'])}",
        f"beta coroots:          {' '.join(str(tuple(b)) for b in rep['beta_coroots'])}",
        "deg matrix L_k.C_j:",
        _deg_table(rep["deg"]),
        f"areas:    {' '.join(rep['areas'])}",
        f"antican:  {' '.join(map(str, rep['antican']))}",
        f"minimal:  {{{', '.join(map(str, rep['minimal']))}}}"
        f"   lines: {{{', '.join(map(str, rep['lines']))}}}",
        f"width:    {rep['width']}   (witness j = {rep['witness']})",
        _render_condition_p_text(rep["condition_p"]),
        f"caseline width: {rep['caseline']}",
    ]
    if rep["degeneration"] is None:
        out.append("degeneration: skipped (condition (P) fails; "
                   "use --force-degeneration to build it anyway)")
    else:
        d = rep["degeneration"]
        out.append(
            f"degeneration: {len(d['dims'])}-stage tower, divisor "
            f"({', '.join(d['divisor'])}), toric width {d['toric_width']} "
            f"at stage {d['toric_stage']}")
    out.append("checks: " + ", ".join(
        f"{k}={'n/a' if v is None else v}" for k, v in rep["checks"].items()))
    for w in rep["warnings"]:
        out.append(f"WARNING: {w}")
    return "\n".join(out)


def _render_condition_p_text(p: dict) -> str:
    if p["holds"]:
        mins = " ".join(f"A_{e['k']}>={e['min']}" for e in p["minima"])
        return f"condition (P): holds  ({mins})" if mins else "condition (P): holds"
    w = p["witness"]
    return (f"condition (P): FAILS at k={w['k']}, "
            f"point ({', '.join(w['point'])}), value {w['value']}")


def cmd_report(args) -> int:
    type_str, inp = _job_input(args)
    rep = build_report(type_str, inp, force_degeneration=args.force_degeneration)
    if args.format == "json":
        print(json.dumps(rep, indent=2))
    else:
        print(_render_report_text(rep))
    return 0


def cmd_check_p(args) -> int:
    type_str, inp = _job_input(args)
    chain = build_chain(inp)
    report = check_condition_p(chain)
    doc = {
        "schema": SCHEMA,
        "command": "check-p",
        "input": {"type": type_str, "word": list(inp.word),
                  "m": [q_str(x) for x in inp.m]},
        "chain": _chain_jsonable(chain),
        "condition_p": _condition_p_jsonable(report),
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for b in doc["chain"]["bounds"]:
            terms = [b["constant"]] + [
                f"{c}*x{v}" for v, c in sorted(b["coeffs"].items(), key=lambda kv: int(kv[0]))
                if c != "0"]
            print(f"A_{b['k']} = " + " + ".join(terms).replace("+ -", "- "))
        print(_render_condition_p_text(doc["condition_p"]))
    return 0


def _collection_from_json(job: dict) -> tuple[BottCollection, Optional[DivisorClass]]:
    if "dims" not in job:
        raise InputError('tower file needs "dims"')
    twists = {}
    for key, val in (job.get("a") or {}).items():
        parts = key.split(",")
        if len(parts) != 3:
            raise InputError(f'twist key {key!r} is not "j,l,k"')
        try:
            j, l, k = (int(p) for p in parts)
            twists[(j, l, k)] = int(val)
        except ValueError as exc:
            raise InputError(f"bad twist entry {key!r}: {val!r}") from exc
    c = BottCollection.create(job["dims"], twists)
    d = None
    if job.get("lambda") is not None:
        d = DivisorClass.create([parse_q(x) for x in job["lambda"]])
    return c, d


def cmd_bott(args) -> int:
    if not args.input:
        raise InputError("bott requires --input file.json")
    c, d = _collection_from_json(_load_json(args.input))
    fan = build_fan(c)
    smooth = check_smooth(fan)
    rels = primitive_relations(c, d)
    warnings = []
    doc = {
        "schema": SCHEMA,
        "command": "bott",
        "dims": list(c.dims),
        "n": c.dim,
        "rays": [list(r) for r in fan.rays],
        "max_cones": [list(cone) for cone in fan.max_cones],
        "smooth": smooth,
        "relations": [
            {"stage": rel.stage, "members": list(rel.members),
             "u_sum": list(rel.u_sum),
             "lambda_sum": None if rel.lambda_sum is None else q_str(rel.lambda_sum),
             "cone_coeffs": [[i, a] for i, a in rel.cone_coeffs],
             "degree": rel.degree}
            for rel in rels
        ],
        "width": None,
        "width_stage": None,
        "warnings": warnings,
    }
    if d is not None:
        width, stage = toric_width(c, d)
        doc["width"], doc["width_stage"] = q_str(width), stage
        for rel in rels:
            if all(x == 0 for x in rel.u_sum) and rel.lambda_sum <= 0:
                warnings.append(
                    f"lambda({rel.stage}) = {q_str(rel.lambda_sum)} <= 0: "
                    "the class cannot be Kahler")
    if args.fan_out:
        with open(args.fan_out, "w", encoding="utf-8") as fh:
            json.dump({"rays": doc["rays"], "max_cones": doc["max_cones"]}, fh)
            fh.write("\n")
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"dims {doc['dims']}, ambient dimension {doc['n']}, "
              f"{len(doc['rays'])} rays, {len(doc['max_cones'])} maximal cones")
        print(f"smooth: {doc['smooth']}")
        for rel in doc["relations"]:
            lam = f", lambda={rel['lambda_sum']}" if rel["lambda_sum"] is not None else ""
            print(f"stage {rel['stage']}: u_sum {rel['u_sum']}, "
                  f"degree {rel['degree']}{lam}")
        if doc["width"] is not None:
            print(f"toric width: {doc['width']} at stage {doc['width_stage']}")
        for w in warnings:
            print(f"WARNING: {w}")
    return 0


def cmd_lattice(args) -> int:
    type_str, inp = _job_input(args)
    chain = build_chain(inp)
    count = 0
    sink = None
    try:
        if args.points_out:
            sink = open(args.points_out, "w", encoding="utf-8")
        for pt in iter_lattice_points(chain):
            count += 1
            if count > args.cap:
                raise CapExceeded(args.cap)
            if sink:
                sink.write(" ".join(map(str, pt)) + "\n")
    finally:
        if sink:
            sink.close()
    doc = {
        "schema": SCHEMA,
        "command": "lattice",
        "input": {"type": type_str, "word": list(inp.word),
                  "m": [q_str(x) for x in inp.m]},
        "count": count,
        "points_file": args.points_out,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        where = f" (written to {args.points_out})" if args.points_out else ""
        print(f"{count} lattice points{where}")
    return 0


def cmd_selftest(args) -> int:
    if args.suite == "all":
        names = list(selftest_mod.SUITES)
    elif args.suite in selftest_mod.SUITES:
        names = [args.suite]
    else:
        raise InputError(
            f"unknown suite {args.suite!r}; choose from "
            f"{', '.join(selftest_mod.SUITES)} or all")
    results = selftest_mod.run_suites(names, args.trials, args.seed)
    ok = all(r.passed for r in results)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "selftest",
            "seed": args.seed,
            "results": [
                {"suite": r.suite, "trials": r.trials, "passed": r.passed,
                 "info": r.info, "failures": r.failures}
                for r in results
            ],
            "passed": ok,
        }
        print(json.dumps(doc, indent=2))
    else:
        for r in results:
            extra = "".join(f", {k}={v}" for k, v in r.info.items())
            print(f"suite {r.suite}: trials={r.trials} "
                  f"{'pass' if r.passed else 'FAIL'}{extra}")
            if r.trials == 0:
                print("  warning: 0 trials, vacuous pass")
            for f in r.failures[:5]:
                print(f"  repro: {json.dumps(f)}")
    return 0 if ok else 1


def _add_job_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="Dynkin type string, e.g. A2 or A3+B2")
    p.add_argument("--word", help="comma-separated 1-based letters, e.g. 1,2,1")
    p.add_argument("--m", help='comma-separated positive rationals, e.g. 1,1,3 or 7/2')
    p.add_argument("--input", help="JSON job file with type/word/m instead of flags")
    p.add_argument("--format", choices=("text", "json"), default="text")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bswidth",
                     description="Exact Gromov widths of Bott-Samelson varieties")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("report", parents=[], help="full width report")
    _add_job_flags(p)
    p.add_argument("--force-degeneration", action="store_true",
                   help="build the Bott tower even when condition (P) fails")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("check-p", help="chain bounds and condition (P)")
    _add_job_flags(p)
    p.set_defaults(func=cmd_check_p)

    p = sub.add_parser("bott", help="fan, primitive relations and toric width "
                                    "of a generalized Bott collection")
    p.add_argument("--input", required=False,
                   help='JSON file {"dims": [...], "a": {"j,l,k": int}, "lambda": [...]}')
    p.add_argument("--fan-out", help="write the fan (rays + cone index lists) as JSON")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("lattice", help="enumerate lattice points of the chain polytope")
    _add_job_flags(p)
    p.add_argument("--cap", type=int, default=1_000_000,
                   help="abort after this many points (default 1000000)")
    p.add_argument("--points-out", help="stream points to this file, one per line")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("selftest", help="seeded randomized cross-check suites")
    p.add_argument("--suite", default="all",
                   help=f"one of {', '.join(selftest_mod.SUITES)} or all")
    p.add_argument("--trials", type=int, default=None,
                   help="trial count (default: per-suite defaults)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"error: {exc} (partial count {exc.partial_count})", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
