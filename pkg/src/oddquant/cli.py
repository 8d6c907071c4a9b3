"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 input error, 3 divisibility failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, List, Optional

from .charring import NotDivisible, canonical_string
from .checks import SUITES, run_suite
from .fpdata import (
    EvenManifoldData,
    ManifestError,
    OddManifoldData,
    dump_manifest,
    emit_manifest,
    load_manifest,
)
from .localize import Convention, quantize_even_isolated, quantize_odd3, up_surface_to_3
from .surgery import ConSumSpec, CutSpec, SpecError, connected_sum, cut_split, qr_report, reduce_circles

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_NOT_DIVISIBLE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _convention(args: argparse.Namespace) -> Convention:
    return Convention(args.normal_factor, args.codim_sign == "on")


def _load(path: str):
    try:
        return load_manifest(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except ManifestError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_odd(path: str) -> OddManifoldData:
    m = _load(path)
    if not isinstance(m, OddManifoldData):
        raise InputError(f"{path}: expected an odd3 manifest")
    return m


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON: {exc}") from None


def _cut_spec(path: str) -> CutSpec:
    return CutSpec.from_json(_read_json(path))


def cmd_quantize(args) -> int:
    m = _load(args.manifest)
    if isinstance(m, EvenManifoldData):
        q = quantize_even_isolated(m)
    else:
        q = quantize_odd3(m, _convention(args))
    print(canonical_string(q))
    return EXIT_OK


def cmd_up(args) -> int:
    n = _load(args.manifest)
    if not isinstance(n, EvenManifoldData) or n.half_dim != 1:
        raise InputError(f"{args.manifest}: up needs an even manifest with half_dim 1")
    sys.stdout.write(dump_manifest(up_surface_to_3(n)))
    return EXIT_OK


def cmd_consum(args) -> int:
    m1, m2 = _load_odd(args.m1), _load_odd(args.m2)
    if args.spec:
        spec = ConSumSpec.from_json(_read_json(args.spec))
    else:
        if args.left is None or args.right is None or args.l is None:
            raise InputError("consum needs --spec or all of --left, --right, --l")
        spec = ConSumSpec(args.left, args.right, args.l)
    sys.stdout.write(dump_manifest(connected_sum(m1, m2, spec)))
    return EXIT_OK


def cmd_cut(args) -> int:
    m = _load_odd(args.manifest)
    plus, minus = cut_split(m, _cut_spec(args.spec))
    if args.plus_out or args.minus_out:
        if not (args.plus_out and args.minus_out):
            raise InputError("give both --plus-out and --minus-out, or neither")
        Path(args.plus_out).write_text(dump_manifest(plus))
        Path(args.minus_out).write_text(dump_manifest(minus))
    else:
        doc = {"plus": emit_manifest(plus), "minus": emit_manifest(minus)}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_reduce(args) -> int:
    print(reduce_circles(_cut_spec(args.spec)))
    return EXIT_OK


def cmd_qr(args) -> int:
    m = _load_odd(args.manifest)
    report = qr_report(m, _cut_spec(args.spec), _convention(args))
    lines = report.lines() + [f"result: {'pass' if report.equal else 'fail'}"]
    print("\n".join(lines))
    return EXIT_OK


def cmd_check(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for i, name in enumerate(names):
        report = run_suite(name, args.seed, args.cases)
        if i:
            print()
        print("\n".join(report.lines()))
        ok &= report.passed
    return EXIT_OK if ok else EXIT_CHECK


def _add_convention_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--normal-factor", choices=["literal", "euler"], default="literal")
    p.add_argument("--codim-sign", choices=["on", "off"], default="off")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddquant", description="Exact Spin^c quantization characters from fixed-point data."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quantize", help="print the character of a manifest")
    p.add_argument("manifest")
    _add_convention_flags(p)
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("up", help="map a surface manifest to its product with S^1")
    p.add_argument("manifest")
    p.set_defaults(func=cmd_up)

    p = sub.add_parser("consum", help="equivariant connected sum of two odd3 manifests")
    p.add_argument("m1")
    p.add_argument("m2")
    p.add_argument("--spec")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_consum)

    p = sub.add_parser("cut", help="split along free tori")
    p.add_argument("manifest")
    p.add_argument("--spec", required=True)
    p.add_argument("--plus-out")
    p.add_argument("--minus-out")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("reduce", help="quantization of the reduced space of a cut")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("qr", help="compare invariant part of Q(M) with Q(M_red)")
    p.add_argument("manifest")
    p.add_argument("--spec", required=True)
    _add_convention_flags(p)
    p.set_defaults(func=cmd_qr)

    p = sub.add_parser("check", help="run a seeded theorem-check suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int)
    p.add_argument("--cases", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ManifestError, SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotDivisible as exc:
        print(f"not divisible: {exc}", file=sys.stderr)
        return EXIT_NOT_DIVISIBLE


if __name__ == "__main__":
    sys.exit(main())
