"""Command-line entry point: ``hamburn <subcommand> [options]``.

JSON output has sorted keys, rationals as "p/q" strings and vertices as
1-based integer arrays. Exit codes: 0 success, 1 guarantee or invariant
failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional

from hamburn import adversary, experiments, hamming, selfcheck
from hamburn.errors import AlgorithmStateError, CapacityError, HamburnError
from hamburn.hamming import Vertex

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, Vertex):
        return list(obj.symbols)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def render_table(obj: dict) -> str:
    width = max((len(k) for k in obj), default=0)
    lines = []
    for key in sorted(obj):
        val = to_jsonable(obj[key])
        if not isinstance(val, str):
            val = json.dumps(val, sort_keys=True)
        lines.append(f"{key:<{width}}  {val}")
    return "\n".join(lines) + "\n"


def _cap(args) -> int:
    return args.cap if args.cap is not None else hamming.default_cap()


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _read_vertices(path: str, q: int, n: Optional[int] = None) -> list[Vertex]:
    data = _read_json(path)
    if not isinstance(data, list) or not all(isinstance(v, list) for v in data):
        raise UsageError("input must be a JSON array of integer arrays")
    out = []
    for raw in data:
        if not all(isinstance(s, int) and not isinstance(s, bool) for s in raw):
            raise UsageError(f"non-integer symbol in {raw}")
        if n is not None and len(raw) != n:
            raise UsageError(f"vertex {raw} has length {len(raw)}, expected n={n}")
        try:
            out.append(Vertex(tuple(raw), q))
        except HamburnError as exc:
            raise UsageError(str(exc)) from exc
    return out


# -- subcommands -------------------------------------------------------------------


def cmd_bounds(args) -> tuple[dict, int]:
    _need(args, "n", "q")
    n, q = args.n, args.q
    report: dict = {"n": n, "q": q, "upper": adversary.upper_bound(n, q)}
    report["lower"] = adversary.lower_bound(n, q) if q >= 3 else None
    try:
        res = hamming.burning_number_with_witness(
            n, q, cap=_cap(args), node_budget=args.node_budget, workers=args.workers
        )
        report["exact"] = res.value
        report["witness"] = list(res.witness)
        report["exact_status"] = "computed"
    except CapacityError as exc:
        report["exact"] = None
        report["witness"] = None
        report["exact_status"] = f"capacity: {exc}"
    return report, EXIT_OK


def cmd_burn_number(args) -> tuple[dict, int]:
    _need(args, "n", "q")
    res = hamming.burning_number_with_witness(
        args.n, args.q, cap=_cap(args), node_budget=args.node_budget, workers=args.workers
    )
    ok = hamming.burns(list(res.witness), cap=_cap(args))
    return {"n": args.n, "q": args.q, "burning_number": res.value, "witness": list(res.witness), "witness_burns": ok}, (
        EXIT_OK if ok else EXIT_FAIL
    )


def cmd_verify_sequence(args) -> tuple[dict, int]:
    _need(args, "input", "q")
    seq = _read_vertices(args.input, args.q, args.n)
    if not seq:
        raise UsageError("sequence must be nonempty")
    miss = hamming.uncovered(seq, cap=_cap(args))
    return {"length": len(seq), "n": seq[0].n, "q": args.q, "burns": miss is None, "uncovered": miss}, EXIT_OK


def cmd_evade(args) -> tuple[dict, int]:
    _need(args, "input", "n", "q")
    if args.q < 3:
        raise UsageError("evade needs q >= 3")
    vs = _read_vertices(args.input, args.q, args.n)
    m = adversary.evader_length(args.n, args.q)
    if len(vs) > m:
        raise UsageError(f"at most m={m} vertices allowed for n={args.n}, q={args.q}")
    try:
        cert = adversary.evade(vs, args.n, args.q)
    except AlgorithmStateError as exc:
        return {"error": str(exc), "valid": False}, EXIT_FAIL
    k, r = cert.floor_case
    report = {
        "n": args.n,
        "q": args.q,
        "m": cert.m,
        "w": cert.w,
        "distances": list(cert.distances),
        "required": list(cert.required),
        "inner_abs": list(cert.inner),
        "floor_case": {"k": k, "r": r},
        "valid": cert.valid,
        "trace": {
            "moves": len(cert.fv.trace),
            "steps": [[rec.s, rec.full_blocks, rec.step] for rec in cert.fv.trace],
        },
    }
    return report, EXIT_OK if cert.valid else EXIT_FAIL


def cmd_bs_check(args) -> tuple[dict, int]:
    if args.input:
        a = _read_json(args.input)
        x = experiments.bs_existence(a)
        return {"n": len(a), "witness": x, "found": x is not None}, EXIT_OK if x is not None else EXIT_FAIL
    _need(args, "n")
    rep = experiments.bs_trials(args.n, args.trials, args.seed)
    return dataclasses.asdict(rep), EXIT_OK if rep.missing == 0 else EXIT_FAIL


def cmd_openproblem(args) -> tuple[dict, int]:
    _need(args, "k")
    mode = args.mode or "randomized"
    budget = args.budget
    if mode == "randomized" and budget is None:
        budget = 10**4
    rep = experiments.open_problem_search(args.k, mode, budget, args.seed, workers=args.workers)
    out = dataclasses.asdict(rep)
    # 0-based internally, 1-based at the boundary
    out["counterexamples"] = [[[s + 1 for s in u] for u in inst] for inst in rep.counterexamples]
    out["witness_stats"] = {str(c): v for c, v in rep.witness_stats.items()}
    out["consistent"] = rep.consistent
    return out, EXIT_OK if rep.consistent else EXIT_FAIL


def cmd_selfcheck(args) -> tuple[dict, int]:
    results = selfcheck.run_all()
    suites = {r.name: {"checked": r.checked, "violations": r.violations, "passed": r.passed} for r in results}
    ok = all(r.passed for r in results)
    return {"suites": suites, "passed": ok}, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "bounds": (cmd_bounds, "lower/upper bounds and, within budget, the exact burning number"),
    "burn-number": (cmd_burn_number, "exact burning number by exhaustive search"),
    "verify-sequence": (cmd_verify_sequence, "check whether a sequence (--input JSON) burns H(n,q)"),
    "evade": (cmd_evade, "evader certificate for the vertices in --input (at most floor((1-1/q)n))"),
    "bs-check": (cmd_bs_check, "two-color existence oracle on random or given sign vectors"),
    "openproblem": (
        cmd_openproblem,
        "search the q=3, n=3k+1 shift problem; vertices are reported 1-based "
        "(internally symbols 0,1,2 with shifts mod 3)",
    ),
    "selfcheck": (cmd_selfcheck, "run all invariant suites"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--q", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--budget", type=int, help="instance budget (openproblem)")
    common.add_argument("--cap", type=int, help="vertex enumeration budget (default $HAMBURN_CAP or 10^7)")
    common.add_argument("--node-budget", type=int, default=hamming.DEFAULT_NODE_BUDGET,
                        help="centers tried per length in the burning-number search")
    common.add_argument("--mode", choices=["exhaustive", "randomized"])
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--input", metavar="PATH")
    common.add_argument("--output", metavar="PATH")

    parser = argparse.ArgumentParser(prog="hamburn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        report, code = handler(args)
    except UsageError as exc:
        print(f"hamburn: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"hamburn: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except AlgorithmStateError as exc:
        print(f"hamburn: invariant failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except HamburnError as exc:
        print(f"hamburn: {exc}", file=sys.stderr)
        return EXIT_USAGE

    text = dumps(report) if args.format == "json" else render_table(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
