"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 mathematical precondition,
4 verification failure, 5 coordinate search exhausted.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .bounds import HypothesisError
from .groebner import buchberger, ideal_membership
from .invariants import hilbert_function, hilbert_polynomial, numerator_coefficients_direct
from .parser import ParseError, emit_report, parse_polynomial, read_ideal, render_hilbert_series, render_univariate
from .pipeline import Analysis, analyze
from .pommaret import (
    CompletionCapExceeded,
    ImproperIdeal,
    NotQuasiStable,
    TransformExhausted,
    restrict_basis,
    saturation_basis,
)
from .random_ideals import random_ideal_inputs
from .verify import verify_ideal

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY, EXIT_TRANSFORM = range(6)

SUBCOMMANDS = ("gb", "pommaret", "invariants", "hilbert", "bounds", "transform", "verify")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pombasis", description="Pommaret bases, Hilbert series invariants and degree bounds.")
    p.add_argument("command", choices=SUBCOMMANDS)
    p.add_argument("files", nargs="*", help="ideal description files (verify: defaults to the shipped fixtures)")
    p.add_argument("--seed", type=int, default=0, help="seed for coordinate changes and random ideals")
    p.add_argument("--max-tries", type=int, default=8)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--member", action="append", default=[], help="polynomial to test for membership (gb)")
    p.add_argument("--random", type=int, default=0, metavar="N", help="verify N random quasi-stable ideals")
    p.add_argument("--oracle-extra-degrees", type=int, default=3)
    p.add_argument("--expect-fail", action="store_true", help="verify: a failure is expected (harness sanity)")
    return p


def fixture_paths() -> list[Path]:
    root = resources.files("pombasis") / "fixtures"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".ideal"))


# -- report builders -------------------------------------------------------------------


def _input_doc(ideal) -> dict:
    return {
        "source": Path(ideal.source_name).name,
        "ring": list(ideal.ctx.names),
        "generators": list(ideal.generators),
        "degrees": ideal.degrees,
        "original_order": ideal.original_order,
    }


def _transform_doc(a: Analysis) -> dict:
    ch = a.change
    return {
        "identity": ch.is_identity,
        "matrix": [list(r) for r in ch.matrix],
        "seed": ch.seed,
        "tries": a.transform.tries,
        "entry_bound": ch.bound,
        "generators": list(a.transform.ideal.generators),
    }


def _basis_doc(a: Analysis) -> list[dict]:
    H = a.basis
    names = H.ctx.names
    return [
        {
            "polynomial": h,
            "leading_term": h.lm,
            "class": cls,
            "degree": deg,
            "multiplicative": [names[i] for i in range(cls - 1, H.n)],
            "nonmultiplicative_count": nonmult,
        }
        for h, (cls, deg, mult, nonmult) in zip(H.elements, H.records())
    ]


def _hp_doc(a: Analysis) -> dict:
    hp = hilbert_polynomial(a.basis)
    return {"coefficients": hp, "text": render_univariate(hp)}


def cmd_gb(ideal, args) -> tuple[dict, int]:
    G = buchberger(ideal.generators)
    doc = {
        "command": "gb",
        "input": _input_doc(ideal),
        "groebner_basis": list(G.elements),
        "gb_degree": G.max_degree,
        "improper": G.improper,
    }
    if args.member:
        doc["membership"] = [
            {"polynomial": text, "member": ideal_membership(parse_polynomial(text, ideal.ctx), G)}
            for text in args.member
        ]
    return doc, EXIT_OK


def cmd_transform(ideal, args) -> tuple[dict, int]:
    a = analyze(ideal, args.seed, args.max_tries)
    return {"command": "transform", "input": _input_doc(ideal), "transform": _transform_doc(a)}, EXIT_OK


def cmd_pommaret(ideal, args) -> tuple[dict, int]:
    a = analyze(ideal, args.seed, args.max_tries)
    doc = {
        "command": "pommaret",
        "input": _input_doc(ideal),
        "transform": _transform_doc(a),
        "basis": _basis_doc(a),
        "size": len(a.basis.elements),
        "max_degree": max(a.basis.degrees),
    }
    return doc, EXIT_OK


def cmd_invariants(ideal, args) -> tuple[dict, int]:
    a = analyze(ideal, args.seed, args.max_tries)
    inv = a.invariants
    doc = {
        "command": "invariants",
        "input": _input_doc(ideal),
        "transform": _transform_doc(a),
        "dimension": inv.dimension,
        "degree": inv.degree,
        "regularity": inv.regularity,
        "depth": inv.depth,
        "satiety": inv.satiety,
        "hilbert_regularity": inv.hilbert_regularity,
        "hilbert_regularity_bound": a.hilbert_regularity_bound,
        "gb_degree": inv.gb_degree,
        "hilbert_series": {
            "numerator": list(a.series.numerator),
            "dimension": a.series.dimension,
            "text": render_hilbert_series(a.series.numerator, a.series.dimension),
        },
        "numerator_text": render_univariate(a.series.numerator),
        "hilbert_polynomial": _hp_doc(a),
    }
    if inv.dimension > 0:
        R = restrict_basis(a.basis, ideal.ctx.n - inv.dimension + 2)
        doc["restriction_from_index"] = ideal.ctx.n - inv.dimension + 2
        doc["restriction_basis_size"] = len(R.elements)
    S = saturation_basis(a.basis)
    doc["saturation_basis"] = list(S.elements)
    return doc, EXIT_OK


def cmd_hilbert(ideal, args) -> tuple[dict, int]:
    a = analyze(ideal, args.seed, args.max_tries)
    top = a.invariants.regularity + args.oracle_extra_degrees
    doc = {
        "command": "hilbert",
        "input": _input_doc(ideal),
        "transform": _transform_doc(a),
        "hilbert_series": {
            "numerator": list(a.series.numerator),
            "numerator_direct": numerator_coefficients_direct(a.basis),
            "dimension": a.series.dimension,
            "text": render_hilbert_series(a.series.numerator, a.series.dimension),
        },
        "hilbert_function": {str(t): hilbert_function(a.basis, t) for t in range(top + 1)},
        "hilbert_polynomial": _hp_doc(a),
        "hilbert_regularity": a.invariants.hilbert_regularity,
    }
    return doc, EXIT_OK


def cmd_bounds(ideal, args) -> tuple[dict, int]:
    a = analyze(ideal, args.seed, args.max_tries)
    rep = a.bounds()
    doc = {
        "command": "bounds",
        "input": _input_doc(ideal),
        "transform": _transform_doc(a),
        "bounds": rep.values,
        "bound_inputs": rep.inputs,
        "checks": {k: ("holds" if v else "violated") for k, v in rep.checks.items()},
        "notes": rep.notes,
        "all_hold": rep.all_hold,
    }
    return doc, EXIT_OK if rep.all_hold else EXIT_VERIFY


def cmd_verify(args) -> tuple[dict, int]:
    paths = [Path(f) for f in args.files] or fixture_paths()
    ideals = [read_ideal(p) for p in paths]
    if args.random:
        ideals += random_ideal_inputs(args.random, args.seed)
    reports = [verify_ideal(i, args.seed, args.max_tries, args.oracle_extra_degrees) for i in ideals]
    for r in reports:
        r.name = Path(r.name).name
    failed = [r for r in reports if not r.ok]
    doc = {
        "command": "verify",
        "checked": len(reports),
        "random": args.random,
        "seed": args.seed,
        "passed": len(reports) - len(failed),
        "failed": len(failed),
        "ideals": [r.as_dict() for r in reports],
    }
    if failed:
        doc["first_failure"] = {"ideal": failed[0].name, "property": failed[0].first_failure()}
    code = EXIT_VERIFY if failed else EXIT_OK
    if args.expect_fail:
        doc["expect_fail"] = True
        if not failed:
            doc["first_failure"] = {"ideal": None, "property": "expected a failure but every property held"}
        code = EXIT_VERIFY
    return doc, code


COMMANDS = {
    "gb": cmd_gb,
    "transform": cmd_transform,
    "pommaret": cmd_pommaret,
    "invariants": cmd_invariants,
    "hilbert": cmd_hilbert,
    "bounds": cmd_bounds,
}


def _error(kind: str, message: str, code: int, **extra) -> tuple[dict, int]:
    doc = {"error": kind, "message": message, "exit_code": code}
    doc.update(extra)
    return doc, code


def run(argv: list[str] | None = None) -> tuple[str, int]:
    """Execute the CLI and return (output text, exit code)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return emit_report({"error": "usage", "message": str(exc), "exit_code": EXIT_USAGE}), EXIT_USAGE
    if args.max_tries < 0 or args.oracle_extra_degrees < 0 or args.random < 0:
        return emit_report({"error": "usage", "message": "numeric options must be non-negative", "exit_code": EXIT_USAGE}, args.format), EXIT_USAGE
    try:
        if args.command == "verify":
            doc, code = cmd_verify(args)
        else:
            if len(args.files) != 1:
                raise UsageError(f"{args.command} needs exactly one input file")
            path = Path(args.files[0])
            if not path.exists():
                raise UsageError(f"no such file: {path}")
            ideal = read_ideal(path)
            doc, code = COMMANDS[args.command](ideal, args)
    except UsageError as exc:
        doc, code = _error("usage", str(exc), EXIT_USAGE)
    except FileNotFoundError as exc:
        doc, code = _error("usage", str(exc), EXIT_USAGE)
    except ParseError as exc:
        doc, code = _error("parse", exc.message, EXIT_PARSE, line=exc.line, column=exc.column)
    except (ImproperIdeal, HypothesisError, NotQuasiStable) as exc:
        doc, code = _error("precondition", str(exc), EXIT_PRECONDITION)
    except TransformExhausted as exc:
        doc, code = _error("transform_exhausted", str(exc), EXIT_TRANSFORM, witness=_witness(exc.witness))
    except CompletionCapExceeded as exc:
        doc, code = _error("verification", str(exc), EXIT_VERIFY)
    return emit_report(doc, args.format), code


def _witness(w):
    if w is None:
        return None
    m, i, j = w
    return {"generator": list(m), "variable": i, "target": j}


def main(argv: list[str] | None = None) -> int:
    out, code = run(argv)
    stream = sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
