"""Command-line front end with deterministic JSON output.

Exit codes: 0 on success, 1 on input or usage errors, 2 on mathematical
negative results (element not in span, missing 3-cycle, failed coprimality,
cyclic seed where acyclicity is required).  Identical inputs produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import basis
from .basis import (
    CyclicSeed,
    IterationCapExceeded,
    NoCycle,
    NotInSpan,
    coprimality_check,
    exchange_partners,
    independence_rank,
    pbw_expand,
    projective_sequence,
    proposition_witness,
    standard_monomials,
    three_cycle_certificate,
)
from .graph import acyclic_order, build_digraph, find_three_cycles, is_acyclic
from .laurent import LaurentPoly, TermFormatError, poly_from_terms, poly_to_terms
from .seed import (
    GeneralizedSeed,
    SeedFormatError,
    apply_sequence,
    load_seed,
    seed_to_obj,
    validate_seed,
)
from .selftest import run_selftest

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2


def _canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _error(kind: str, detail: str) -> dict:
    return {"error": {"kind": kind, "detail": detail}}


def _default_max_steps() -> int:
    raw = os.environ.get("GCA_MAX_STEPS")
    if raw is None:
        return basis.DEFAULT_MAX_STEPS
    try:
        val = int(raw)
    except ValueError:
        raise SystemExit(f"GCA_MAX_STEPS={raw!r} is not an integer")
    if val < 1:
        raise SystemExit("GCA_MAX_STEPS must be at least 1")
    return val


def _parse_dirs(raw: str) -> list[int]:
    if raw.strip() == "":
        return []
    try:
        return [int(tok) for tok in raw.split(",")]
    except ValueError:
        raise SeedFormatError("--seq", f"{raw!r} is not a comma-separated direction list") from None


def _load_valid_seed(path: str) -> GeneralizedSeed:
    seed = load_seed(path)
    report = validate_seed(seed)
    if not report.ok:
        first = report.errors[0]
        raise SeedFormatError(first.path, f"invalid seed: {first.message}")
    return seed


def _cmd_validate(args) -> tuple[int, dict]:
    seed = load_seed(args.seed)
    report = validate_seed(seed)
    return (EXIT_OK if report.ok else EXIT_INPUT), report.to_obj()


def _cmd_mutate(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    dirs = _parse_dirs(args.seq)
    for k in dirs:
        if not 1 <= k <= seed.n:
            raise SeedFormatError("--seq", f"direction {k} outside [1, {seed.n}]")
    out = apply_sequence(seed, dirs)
    return EXIT_OK, seed_to_obj(out)


def _cmd_graph(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    G = build_digraph(seed.matrix)
    if args.check == "acyclic":
        return EXIT_OK, {"acyclic": is_acyclic(G)}
    if args.check == "3cycles":
        return EXIT_OK, {"three_cycles": [list(c) for c in find_three_cycles(G)]}
    order = acyclic_order(seed.matrix)
    if order is None:
        return EXIT_NEGATIVE, {"acyclic": False, "order": None}
    return EXIT_OK, {"acyclic": True, "order": list(order)}


def _cmd_projective(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    data = projective_sequence(seed)
    return EXIT_OK, {
        "projective": [poly_to_terms(p) for p in data.projective],
        "leading": [
            {"exponent": list(ld.exponent), "coefficient": poly_to_terms(ld.coefficient)}
            for ld in data.leading
        ],
    }


def _cmd_pbw_expand(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    with open(args.element, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TermFormatError(f"invalid JSON in {args.element}: {exc}") from None
    element = poly_from_terms(seed.m, seed.n, raw)
    data = projective_sequence(seed)
    expansion = pbw_expand(element, data, max_steps=args.max_steps)
    return EXIT_OK, {
        "expansion": [
            {"a": list(a), "coefficient": poly_to_terms(c)} for a, c in expansion.terms
        ]
    }


def _cmd_standard_monomials(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    mons = standard_monomials(seed, args.flavor, args.max_degree)
    return EXIT_OK, {"flavor": args.flavor, "monomials": [list(a) for a in mons]}


def _cmd_independence(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    mons = standard_monomials(seed, args.flavor, args.max_degree)
    data = projective_sequence(seed) if args.flavor == "projective" else None
    res = independence_rank(mons, seed, flavor=args.flavor, data=data)
    return EXIT_OK, {
        "flavor": args.flavor,
        "count": res.count,
        "rank": res.rank,
        "full": res.full,
        "dependence": None if res.dependence is None
        else [poly_to_terms(c) for c in res.dependence],
    }


def _cmd_coprime(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    pairs = coprimality_check(seed)
    all_coprime = all(p.coprime for p in pairs)
    obj = {
        "coprime": all_coprime,
        "pairs": [
            {"i": p.i, "j": p.j, "coprime": p.coprime, "gcd": poly_to_terms(p.gcd)}
            for p in pairs
        ],
    }
    return (EXIT_OK if all_coprime else EXIT_NEGATIVE), obj


def _cmd_witness(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    w = proposition_witness(seed, args.direction, max_steps=args.max_steps)
    return EXIT_OK, {
        "direction": w.direction,
        "monomial": poly_to_terms(w.monomial),
        "f": poly_to_terms(w.f),
        "check": w.check,
        "expansion": None if w.expansion is None else [
            {"a": list(a), "coefficient": poly_to_terms(c)} for a, c in w.expansion.terms
        ],
    }


def _cmd_certificate(args) -> tuple[int, dict]:
    seed = _load_valid_seed(args.seed)
    cycle = _parse_dirs(args.cycle)
    if len(cycle) != 3:
        raise SeedFormatError("--cycle", "expected three comma-separated directions")
    cert = three_cycle_certificate(seed, tuple(cycle))
    return EXIT_OK, {
        "cycle": list(cert.cycle),
        "lhs": {"descriptor": list(cert.lhs), "value": poly_to_terms(cert.lhs_value)},
        "rhs": [
            {"descriptor": list(a), "coefficient": poly_to_terms(c)}
            for a, c in cert.rhs
        ],
        "residual": poly_to_terms(cert.residual),
        "residual_descriptors": [
            {"descriptor": list(a), "coefficient": poly_to_terms(c)}
            for a, c in cert.residual_descriptors()
        ],
    }


def _cmd_selftest(args) -> tuple[int, dict]:
    report, ok = run_selftest(args.filter)
    return (EXIT_OK if ok else EXIT_INPUT), report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gca",
        description="Exact computations in generalized cluster algebras of geometric type.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, seed_required=True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=fn)
        if seed_required:
            p.add_argument("--seed", required=True, help="path to a seed JSON file")
        p.add_argument("--output", help="write the JSON document here instead of stdout")
        return p

    add("validate", _cmd_validate, "check every seed invariant")

    p = add("mutate", _cmd_mutate, "apply a mutation sequence")
    p.add_argument("--seq", required=True,
                   help="comma-separated directions, e.g. 1,2 (empty for none)")

    p = add("graph", _cmd_graph, "directed-graph checks")
    p.add_argument("--check", required=True, choices=["acyclic", "3cycles", "order"])

    add("projective", _cmd_projective, "generalized projective cluster variables")

    p = add("pbw-expand", _cmd_pbw_expand, "expand an element in the dual PBW basis")
    p.add_argument("--element", required=True, help="path to a JSON term list")
    p.add_argument("--max-steps", type=int, default=None,
                   help="elimination cap (default GCA_MAX_STEPS or 10^6)")

    p = add("standard-monomials", _cmd_standard_monomials, "enumerate standard monomials")
    p.add_argument("--flavor", required=True, choices=["classic", "projective"])
    p.add_argument("--max-degree", type=int, required=True)

    p = add("independence", _cmd_independence, "rank of standard monomials over ZP")
    p.add_argument("--flavor", default="classic", choices=["classic", "projective"])
    p.add_argument("--max-degree", type=int, required=True)

    add("coprime", _cmd_coprime, "pairwise coprimality of exchange products")

    p = add("witness", _cmd_witness, "subalgebra-membership witness for one direction")
    p.add_argument("--direction", type=int, required=True)
    p.add_argument("--max-steps", type=int, default=None)

    p = add("certificate", _cmd_certificate, "3-cycle dependence certificate")
    p.add_argument("--cycle", required=True, help="three directions, e.g. 1,2,3")

    p = add("selftest", _cmd_selftest, "run the built-in golden example suite",
            seed_required=False)
    p.add_argument("--filter", help="run only checks whose name contains this substring")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_steps", None) is None and hasattr(args, "max_steps"):
        args.max_steps = _default_max_steps()
    if getattr(args, "max_steps", 1) < 1:
        _emit(args, _error("usage", "--max-steps must be at least 1"))
        return EXIT_INPUT
    try:
        code, obj = args.handler(args)
    except FileNotFoundError as exc:
        code, obj = EXIT_INPUT, _error("missing-file", str(exc))
    except SeedFormatError as exc:
        code, obj = EXIT_INPUT, _error("seed-format", str(exc))
    except TermFormatError as exc:
        code, obj = EXIT_INPUT, _error("term-format", str(exc))
    except NotInSpan as exc:
        code, obj = EXIT_NEGATIVE, _error("not-in-span", str(exc))
    except NoCycle as exc:
        code, obj = EXIT_NEGATIVE, _error("no-cycle", str(exc))
    except CyclicSeed as exc:
        code, obj = EXIT_NEGATIVE, _error("cyclic-seed", str(exc))
    except IterationCapExceeded as exc:
        code, obj = EXIT_INPUT, _error("iteration-cap", str(exc))
    except ValueError as exc:
        code, obj = EXIT_INPUT, _error("usage", str(exc))
    _emit(args, obj)
    return code


def _emit(args, obj) -> None:
    text = _canonical(obj)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
