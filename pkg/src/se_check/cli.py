"""``se-check`` command line front end.

Exit codes: 0 success / equivalent, 1 not equivalent, 2 input error,
3 inconclusive sampling, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import classical, ht, l3, semantics
from .errors import NestedInput, ParseError, SignatureTooLarge, UnsupportedOperator
from .normal_form import normalize
from .parser import parse_program, parse_theory, print_program, print_theory
from .syntax import Program

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3
EXIT_CAP = 4

EQUIVALENT = "STRONGLY-EQUIVALENT"
NOT_EQUIVALENT = "NOT-STRONGLY-EQUIVALENT"
INCONCLUSIVE = "NO-COUNTEREXAMPLE-FOUND"


class InputError(Exception):
    pass


@dataclass
class Config:
    max_atoms: Optional[int] = None
    seed: int = 0
    format: str = "text"

    @classmethod
    def from_args(cls, args) -> "Config":
        cap = args.max_atoms
        if cap is None and os.environ.get("SE_CHECK_MAX_ATOMS"):
            try:
                cap = int(os.environ["SE_CHECK_MAX_ATOMS"])
            except ValueError:
                raise InputError("SE_CHECK_MAX_ATOMS must be an integer")
        if cap is not None and cap < 0:
            raise InputError("--max-atoms must be non-negative")
        return cls(cap, args.seed, args.format)


# -- rendering ---------------------------------------------------------------


def _sorted_set(atoms) -> list:
    return sorted(atoms)


def format_set(atoms) -> str:
    return "{" + ",".join(_sorted_set(atoms)) + "}"


def format_pair(pair) -> str:
    return f"({format_set(pair[0])},{format_set(pair[1])})"


def model_list(models) -> list:
    return sorted(_sorted_set(m) for m in models)


def pair_list(pairs) -> list:
    return sorted([_sorted_set(p), _sorted_set(a)] for p, a in pairs)


def _emit(cfg: Config, text_lines, payload):
    if cfg.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


# -- input -------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}")


def load_program(path: str) -> Program:
    text = _read(path)
    try:
        return parse_program(text)
    except ParseError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}")


def load_theory(path: str):
    text = _read(path)
    try:
        return parse_theory(text)
    except ParseError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}")


def _joint(p1: Program, p2: Program):
    if set(p1.signature) != set(p2.signature):
        print(
            "warning: signatures differ; comparing over their union "
            f"{format_set(p1.signature.union(p2.signature).atoms)}",
            file=sys.stderr,
        )
    sig = p1.signature.union(p2.signature)
    return p1.with_signature(sig), p2.with_signature(sig)


# -- commands ----------------------------------------------------------------


def cmd_parse(args, cfg: Config) -> int:
    if args.theory:
        text = print_theory(load_theory(args.file))
    else:
        text = print_program(load_program(args.file))
    _emit(cfg, [text] if text else [], {"program": text})
    return EXIT_OK


def cmd_stable(args, cfg: Config) -> int:
    method = args.method
    if args.theory:
        if method not in ("l3", "ht"):
            raise InputError("--theory input only supports --method l3 or ht")
        source = load_theory(args.file)
    else:
        source = load_program(args.file)
    if method == "reduct":
        models = semantics.stable_models(source, cfg.max_atoms)
    elif method == "circ":
        models = classical.stable_models_circ(source, cfg.max_atoms)
    elif method == "l3":
        models = l3.l3_stable_models(source, cfg.max_atoms)
    else:
        models = ht.ht_equilibrium(source, cfg.max_atoms)
    listed = model_list(models)
    _emit(cfg, [format_set(m) for m in listed], listed)
    return EXIT_OK


def cmd_models(args, cfg: Config) -> int:
    enc = args.encoding
    if args.theory:
        if enc not in ("l3", "ht"):
            raise InputError("--theory input only supports --encoding l3 or ht")
        source = load_theory(args.file)
    else:
        source = load_program(args.file)
    engine = {
        "a": classical.models_a,
        "star": classical.models_star,
        "subtotal": classical.subtotal_models,
        "l3": l3.l3_models,
        "ht": ht.ht_models,
    }[enc]
    pairs = pair_list(engine(source, cfg.max_atoms))
    _emit(cfg, [format_pair(p) for p in pairs], pairs)
    return EXIT_OK


def cmd_normalize(args, cfg: Config) -> int:
    text = print_program(normalize(load_program(args.file)))
    _emit(cfg, [text] if text else [], {"program": text})
    return EXIT_OK


def _witness_payload(context: Program, s1, s2, extra=None) -> dict:
    out = {
        "program": print_program(context),
        "stable_models": {"first": model_list(s1), "second": model_list(s2)},
    }
    out.update(extra or {})
    return out


def cmd_se(args, cfg: Config) -> int:
    p1, p2 = _joint(load_program(args.file1), load_program(args.file2))
    method = args.method
    payload = {"method": method}
    witness = None

    if method == "sample":
        context = semantics.sample_refute_se(p1, p2, args.max_rules, args.trials, cfg.seed, cfg.max_atoms)
        if context is None:
            payload["verdict"] = INCONCLUSIVE
            _emit(cfg, [INCONCLUSIVE], payload)
            return EXIT_INCONCLUSIVE
        verdict = False
        if args.witness:
            s1 = semantics.stable_models(semantics.union(p1, context), cfg.max_atoms)
            s2 = semantics.stable_models(semantics.union(p2, context), cfg.max_atoms)
            witness = _witness_payload(context, s1, s2)
    else:
        if method == "classical":
            verdict = classical.strongly_equivalent(p1, p2, cfg.max_atoms)
        elif method == "subtotal":
            verdict = classical.se_by_subtotal(p1, p2, cfg.max_atoms)
        else:
            verdict = l3.strongly_equivalent_l3(p1, p2, cfg.max_atoms)
        if not verdict and args.witness:
            # normalizing keeps strong equivalence, so a context for the
            # normal forms also separates the originals
            n1 = p1 if p1.is_non_nested() else normalize(p1)
            n2 = p2 if p2.is_non_nested() else normalize(p2)
            w = classical.find_witness(n1, n2, cfg.max_atoms)
            s1 = semantics.stable_models(semantics.union(p1, w.program), cfg.max_atoms)
            s2 = semantics.stable_models(semantics.union(p2, w.program), cfg.max_atoms)
            witness = _witness_payload(
                w.program,
                s1,
                s2,
                {
                    "case": w.case,
                    "pair": [_sorted_set(w.pair.proved), _sorted_set(w.pair.assumed)],
                    "stable_in": w.stable_in,
                    "model": _sorted_set(w.pair.assumed),
                },
            )

    payload["verdict"] = EQUIVALENT if verdict else NOT_EQUIVALENT
    lines = [payload["verdict"]]
    if witness is not None:
        payload["witness"] = witness
        lines.append("% distinguishing context:")
        if witness["program"]:
            lines.append(witness["program"])
        if "model" in witness:
            lines.append(
                f"% {format_set(witness['model'])} is stable only with program {witness['stable_in']}"
            )
        lines.append(f"% stable models of {args.file1} + context:")
        lines.extend(format_set(m) for m in witness["stable_models"]["first"])
        lines.append(f"% stable models of {args.file2} + context:")
        lines.extend(format_set(m) for m in witness["stable_models"]["second"])
    _emit(cfg, lines, payload)
    return EXIT_OK if verdict else EXIT_NOT_EQUIVALENT


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-atoms", type=int, default=None,
                        help="enumeration cap on the signature size (default: 16 for set "
                             "enumeration, 10 for pair enumeration; env SE_CHECK_MAX_ATOMS)")
    common.add_argument("--seed", type=int, default=0, help="seed for --method sample")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="se-check",
        description="Strong equivalence and stable models of ground logic programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and pretty-print a program")
    p.add_argument("file")
    p.add_argument("--theory", action="store_true", help="read arbitrary formulas (L, M, <-, <->)")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("stable", parents=[common], help="list stable models")
    p.add_argument("file")
    p.add_argument("--method", choices=("reduct", "circ", "l3", "ht"), default="reduct")
    p.add_argument("--theory", action="store_true", help="read arbitrary formulas (l3/ht only)")
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("se", parents=[common], help="decide strong equivalence of two programs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--method", choices=("classical", "subtotal", "l3", "sample"), default="classical")
    p.add_argument("--witness", action="store_true", help="print a distinguishing context")
    p.add_argument("--max-rules", type=int, default=3, help="context size bound for --method sample")
    p.add_argument("--trials", type=int, default=1000, help="number of contexts for --method sample")
    p.set_defaults(func=cmd_se)

    p = sub.add_parser("models", parents=[common], help="list (proved, assumed) pairs")
    p.add_argument("file")
    p.add_argument("--encoding", choices=("a", "star", "subtotal", "l3", "ht"), default="subtotal")
    p.add_argument("--theory", action="store_true", help="read arbitrary formulas (l3/ht only)")
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("normalize", parents=[common], help="unfold nested rules")
    p.add_argument("file")
    p.set_defaults(func=cmd_normalize)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = Config.from_args(args)
        return args.func(args, cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NestedInput as exc:
        print(f"error: {exc} (try `se-check normalize`)", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedOperator as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SignatureTooLarge as exc:
        print(f"error: {exc}; raise --max-atoms to proceed", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
