"""Command-line front end.

Subcommands:
    compute   print a complete weight enumerator (JSON or text)
    compare   run closed form and brute force, report the first difference
    weights   print the weight distribution
    explain   print the errata ledger (deviations from the published forms)

Exit codes:
    0  success (compare: the two methods agree)
    1  compare found a mismatch
    2  usage or parameter error
    3  enumeration budget exceeded

The brute-force enumeration budget defaults to 2^24 codewords and can be
overridden by --budget or the RSCWE_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from .codes import DEFAULT_ENUM_BUDGET, CodeSpec, make_eval_set
from .cwe import (
    CwePolynomial,
    cwe_bruteforce,
    cwe_equal,
    cwe_formula,
    errata_text,
    render_terms,
    serialize,
    weight_distribution,
)
from .errors import RscweError, SizeLimitError
from .gf import FieldContext, build_field

BUDGET_ENV_VAR = "RSCWE_BUDGET"


@dataclass
class RunConfig:
    p: int
    m: int
    k: int
    method: str = "formula"
    eval_kind: str = "full"
    extended: bool = False
    output: str = "text"
    seed: int = 0
    budget: int = DEFAULT_ENUM_BUDGET


def parse_eval_kind(text: str) -> tuple[str, int | None, tuple[int, ...] | None]:
    """Split an --eval value into (kind, beta, points)."""
    if text in ("full", "primitive", "standard"):
        return text, None, None
    if text.startswith("punctured:"):
        payload = text[len("punctured:"):]
        try:
            return "punctured", int(payload), None
        except ValueError:
            raise RscweError(f"bad punctured point {payload!r}; expected an integer")
    if text.startswith("custom:"):
        payload = text[len("custom:"):]
        try:
            points = tuple(int(x) for x in payload.split(","))
        except ValueError:
            raise RscweError(
                f"bad custom point list {payload!r}; expected comma-separated integers"
            )
        return "custom", None, points
    raise RscweError(
        f"unknown evaluation set {text!r}; expected full, primitive, standard, "
        "punctured:<code>, or custom:<code,code,...>"
    )


def _resolve_budget(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise RscweError(f"{BUDGET_ENV_VAR}={env!r} is not an integer")
    return DEFAULT_ENUM_BUDGET


def _spec_from_config(cfg: RunConfig) -> CodeSpec:
    ctx = build_field(cfg.p, cfg.m)
    kind, beta, points = parse_eval_kind(cfg.eval_kind)
    alpha = make_eval_set(ctx, kind, beta=beta, points=points)
    return CodeSpec(ctx, cfg.k, alpha, cfg.extended)


def _compute_one(spec: CodeSpec, method: str, budget: int) -> CwePolynomial:
    if method == "brute":
        return cwe_bruteforce(spec, budget=budget)
    if method == "formula":
        return cwe_formula(spec)
    raise RscweError(f"unknown method {method!r}")


def _emit_cwe(spec: CodeSpec, cwe: CwePolynomial, output: str) -> None:
    if output == "json":
        print(serialize(spec, cwe))
    else:
        for line in render_terms(cwe):
            print(line)


def _report_mismatch(diff: tuple[tuple[int, ...], int, int]) -> None:
    exps, brute_c, formula_c = diff
    print(
        f"MISMATCH at e={list(exps)}: brute={brute_c} formula={formula_c}",
        file=sys.stderr,
    )


def _random_eval_specs(
    ctx: FieldContext, k: int, extended: bool, count: int, seed: int
) -> list[CodeSpec]:
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        n = rng.randint(max(k, 2), ctx.q)
        alpha = tuple(rng.sample(range(ctx.q), n))
        specs.append(CodeSpec(ctx, k, alpha, extended))
    return specs


def cmd_compute(cfg: RunConfig) -> int:
    spec = _spec_from_config(cfg)
    if cfg.method == "both":
        brute = cwe_bruteforce(spec, budget=cfg.budget)
        formula = cwe_formula(spec)
        equal, diff = cwe_equal(brute, formula)
        if not equal:
            _report_mismatch(diff)
            return 1
        _emit_cwe(spec, formula, cfg.output)
        return 0
    _emit_cwe(spec, _compute_one(spec, cfg.method, cfg.budget), cfg.output)
    return 0


def cmd_compare(cfg: RunConfig, random_sets: int) -> int:
    spec = _spec_from_config(cfg)
    jobs = [spec]
    if random_sets:
        if cfg.k != 2:
            raise RscweError("--random-sets needs --k 2 (closed form for any set)")
        print(f"# random sweep: {random_sets} sets, seed {cfg.seed}")
        jobs += _random_eval_specs(
            spec.ctx, cfg.k, cfg.extended, random_sets, cfg.seed
        )
    for job in jobs:
        brute = cwe_bruteforce(job, budget=cfg.budget)
        formula = cwe_formula(job)
        equal, diff = cwe_equal(brute, formula)
        label = f"k={job.k} n={job.n} extended={job.extended} alpha={list(job.alpha)}"
        if not equal:
            print(f"FAIL {label}")
            _report_mismatch(diff)
            return 1
        print(f"OK {label}: {len(formula)} terms, mass {formula.mass()}")
    return 0


def cmd_weights(cfg: RunConfig) -> int:
    spec = _spec_from_config(cfg)
    if cfg.method == "both":
        brute = cwe_bruteforce(spec, budget=cfg.budget)
        formula = cwe_formula(spec)
        equal, diff = cwe_equal(brute, formula)
        if not equal:
            _report_mismatch(diff)
            return 1
        cwe = formula
    else:
        cwe = _compute_one(spec, cfg.method, cfg.budget)
    dist = weight_distribution(cwe)
    if cfg.output == "json":
        doc = {
            "p": spec.ctx.p,
            "m": spec.ctx.m,
            "k": spec.k,
            "n": cwe.n,
            "extended": spec.extended,
            "alpha": list(spec.alpha),
            "weights": dist,
        }
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        for i, a in enumerate(dist):
            print(f"A[{i}] = {a}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rscwe",
        description=(
            "Complete weight enumerators of Reed-Solomon and extended "
            "Reed-Solomon codes over GF(p^m)."
        ),
        epilog=f"Environment: {BUDGET_ENV_VAR} overrides the enumeration budget.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_method: bool):
        sp.add_argument("--p", type=int, required=True, help="field characteristic (prime)")
        sp.add_argument("--m", type=int, default=1, help="extension degree (default 1)")
        sp.add_argument("--k", type=int, required=True, help="code dimension")
        sp.add_argument(
            "--eval",
            dest="eval_kind",
            default="full",
            help=(
                "evaluation set: full | primitive | standard | punctured:<code> "
                "| custom:<code,code,...> (default full)"
            ),
        )
        sp.add_argument(
            "--extended", action="store_true", help="append the leading coefficient"
        )
        sp.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"max codewords to enumerate (default {DEFAULT_ENUM_BUDGET})",
        )
        if with_method:
            sp.add_argument(
                "--method",
                choices=("brute", "formula", "both"),
                default="formula",
                help="computation method (default formula)",
            )
            sp.add_argument(
                "--output",
                choices=("json", "text"),
                default="text",
                help="output format (default text)",
            )

    sp = sub.add_parser("compute", help="print the complete weight enumerator")
    add_common(sp, with_method=True)

    sp = sub.add_parser("compare", help="closed form vs brute force")
    add_common(sp, with_method=False)
    sp.add_argument(
        "--random-sets",
        type=int,
        default=0,
        metavar="N",
        help="also compare N random evaluation sets (k=2 only)",
    )
    sp.add_argument("--seed", type=int, default=0, help="seed for --random-sets")

    sp = sub.add_parser("weights", help="print the weight distribution")
    add_common(sp, with_method=True)

    sub.add_parser("explain", help="print the errata ledger")
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "explain":
        print(errata_text())
        return 0
    try:
        cfg = RunConfig(
            p=args.p,
            m=args.m,
            k=args.k,
            method=getattr(args, "method", "formula"),
            eval_kind=args.eval_kind,
            extended=args.extended,
            output=getattr(args, "output", "text"),
            seed=getattr(args, "seed", 0),
            budget=_resolve_budget(args.budget),
        )
        if args.command == "compute":
            return cmd_compute(cfg)
        if args.command == "compare":
            return cmd_compare(cfg, args.random_sets)
        if args.command == "weights":
            return cmd_weights(cfg)
        raise AssertionError(f"unhandled command {args.command!r}")
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RscweError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
