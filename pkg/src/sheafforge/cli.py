"""Command line interface.

Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .groebner import Ideal
from .linspace import linear_space_ideal, primary_component, pc_is_linear
from .modification import (
    blowup_origin,
    blowup_coordinate_subspace,
    canonical_multiplicity,
    pushforward_ideal,
    torsion_free_pullback_ideal,
    verify_injection_chain,
)
from .modules import classify_sheaf, presentation_of_ideal, torsion_submodule
from .orders import parse_order
from .parser import ParseError, parse_input, parse_polynomial
from .report import verify_paper


def _load(path):
    try:
        with open(path) as fh:
            return parse_input(fh.read())
    except FileNotFoundError:
        raise SystemExit(2)
    except ParseError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _need_ideal(parsed, path):
    if parsed.ideal is not None:
        return parsed.ideal
    if parsed.generators is not None:
        return Ideal(parsed.ring, parsed.generators)
    print(f"{path}: no ideal found", file=sys.stderr)
    raise SystemExit(2)


def _need_presentation(parsed, path):
    if parsed.presentation is not None:
        return parsed.presentation
    if parsed.ideal is not None:
        return presentation_of_ideal(parsed.ideal)
    print(f"{path}: no presentation or ideal found", file=sys.stderr)
    raise SystemExit(2)


def _emit(payload, args):
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def cmd_gb(args):
    parsed = _load(args.file)
    ideal = _need_ideal(parsed, args.file)
    order = parse_order(args.order) if args.order else None
    gb = ideal.groebner_basis(order)
    for g in gb:
        print(g)
    _emit({"command": "gb", "basis": [str(g) for g in gb]}, args)
    return 0


def cmd_member(args):
    parsed = _load(args.file)
    ideal = _need_ideal(parsed, args.file)
    try:
        f = parse_polynomial(args.poly, parsed.ring)
    except ParseError as exc:
        print(exc, file=sys.stderr)
        return 2
    inside = ideal.contains(f)
    print("member" if inside else "not a member")
    _emit({"command": "member", "poly": args.poly, "member": inside}, args)
    return 0 if inside else 1


def cmd_sat(args):
    parsed = _load(args.file)
    ideal = _need_ideal(parsed, args.file)
    try:
        f = parse_polynomial(args.poly, parsed.ring)
    except ParseError as exc:
        print(exc, file=sys.stderr)
        return 2
    sat, exponent = ideal.saturation(f)
    gens = [str(g) for g in sat.reduced_generators()]
    print("saturation:", ", ".join(gens) or "0")
    print("exponent:", exponent)
    _emit({"command": "sat", "generators": gens, "exponent": exponent}, args)
    return 0


def _parse_point(text, ring):
    values = [Fraction(v) for v in text.split(",")]
    if len(values) != len(ring.variables):
        raise SystemExit(2)
    return dict(zip(ring.variables, values))


def cmd_classify(args):
    parsed = _load(args.file)
    pres = _need_presentation(parsed, args.file)
    point = _parse_point(args.at, parsed.ring) if args.at else None
    rep = classify_sheaf(pres, point)
    for key, value in rep.as_dict().items():
        print(f"{key}: {value}")
    _emit({"command": "classify", **rep.as_dict()}, args)
    return 0


def cmd_torsion(args):
    parsed = _load(args.file)
    pres = _need_presentation(parsed, args.file)
    tor = torsion_submodule(pres)
    if tor.is_trivial:
        print("torsion-free")
    else:
        for gen, wit in tor.witnesses:
            print(f"torsion generator {gen} killed by {wit}")
    _emit(
        {
            "command": "torsion",
            "torsion_free": tor.is_trivial,
            "witnesses": [[str(g), str(w)] for g, w in tor.witnesses],
        },
        args,
    )
    return 0


def cmd_linspace(args):
    parsed = _load(args.file)
    pres = _need_presentation(parsed, args.file)
    L = linear_space_ideal(pres)
    print("cone ideal:", ", ".join(str(g) for g in L.ideal.generators) or "0")
    pc = primary_component(L)
    gens = [str(g) for g in pc.ideal.reduced_generators()]
    print("primary component:", ", ".join(gens) or "0")
    linear = pc_is_linear(pc)
    print("primary component linear:", linear)
    _emit(
        {
            "command": "linspace",
            "cone": [str(g) for g in L.ideal.generators],
            "primary_component": gens,
            "linear": linear,
        },
        args,
    )
    return 0


def _build_blowup(args):
    if args.center == "origin":
        return blowup_origin(args.n)
    if args.center.startswith("subspace:"):
        s = int(args.center.split(":", 1)[1])
        return blowup_coordinate_subspace(args.n, s)
    print(f"unsupported center {args.center!r}", file=sys.stderr)
    raise SystemExit(2)


def cmd_blowup(args):
    parsed = _load(args.sheaf)
    ideal = _need_ideal(parsed, args.sheaf)
    m = _build_blowup(args)
    if len(m.base.variables) != len(parsed.ring.variables):
        print("ring does not match the blow-up base", file=sys.stderr)
        return 2
    m.base = parsed.ring if not parsed.ring.relations else m.base
    if args.op == "pullback":
        payload = []
        for chart, K in zip(m.charts, torsion_free_pullback_ideal(ideal, m)):
            gens = [str(g) for g in K.generators]
            print(f"chart {chart.ring}: {', '.join(gens)}")
            payload.append(gens)
        _emit({"command": "blowup", "op": args.op, "charts": payload}, args)
        return 0
    if args.op == "pT":
        payload = []
        for chart, K in zip(m.charts, torsion_free_pullback_ideal(ideal, m)):
            gens = [str(g) for g in K.reduced_generators()]
            print(f"chart {chart.ring}: {', '.join(gens)}")
            payload.append(gens)
        _emit({"command": "blowup", "op": args.op, "charts": payload}, args)
        return 0
    if args.op == "pushforward":
        charts = torsion_free_pullback_ideal(ideal, m)
        result = pushforward_ideal(charts, m)
        gens = [str(g) for g in result.reduced_generators()]
        print(", ".join(gens) or "0")
        _emit({"command": "blowup", "op": args.op, "generators": gens}, args)
        return 0
    if args.op == "chain":
        rep = verify_injection_chain(ideal, m, args.degree_bound)
        print("chain holds:", rep.chain_holds)
        print("middle:", ", ".join(str(g) for g in rep.middle_ideal.reduced_generators()))
        print("top:", ", ".join(str(g) for g in rep.top_ideal.reduced_generators()))
        if rep.first_strict:
            print("first inclusion strict, witness:", rep.first_witness)
        if rep.second_strict:
            print("second inclusion strict, witness:", rep.second_witness)
        print("stable:", rep.stable)
        _emit(
            {
                "command": "blowup",
                "op": "chain",
                "chain_holds": rep.chain_holds,
                "middle": [str(g) for g in rep.middle_ideal.reduced_generators()],
                "top": [str(g) for g in rep.top_ideal.reduced_generators()],
                "first_witness": str(rep.first_witness),
                "second_witness": str(rep.second_witness),
                "stable": rep.stable,
            },
            args,
        )
        return 0 if rep.chain_holds and rep.stable else 1
    return 2


def cmd_canonical(args):
    m = _build_blowup(args)
    div = canonical_multiplicity(m)
    print("multiplicities:", div.multiplicities)
    _emit({"command": "canonical", "multiplicities": div.multiplicities}, args)
    return 0


def cmd_verify(args):
    report = verify_paper(args.only)
    print(report.to_markdown())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sheaf-forge",
        description="Exact computations with presented modules, cones and blow-ups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", help="write a JSON report to this path")

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("file")
    p.add_argument("--order", help="lex | degrevlex | block:k:... | weighted:w,..:..")
    common(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("member", help="ideal membership test")
    p.add_argument("file")
    p.add_argument("poly")
    common(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("sat", help="saturation of an ideal by a polynomial")
    p.add_argument("file")
    p.add_argument("poly")
    common(p)
    p.set_defaults(func=cmd_sat)

    p = sub.add_parser("classify", help="structural report on a presented module")
    p.add_argument("file")
    p.add_argument("--at", help="rational point, e.g. 0,0")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("torsion", help="torsion submodule of a presented module")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("linspace", help="associated cone and its primary component")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_linspace)

    p = sub.add_parser("blowup", help="transforms of an ideal sheaf under a blow-up")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--center", default="origin", help="origin | subspace:s")
    p.add_argument("--sheaf", required=True)
    p.add_argument("--op", required=True, choices=["pullback", "pT", "pushforward", "chain"])
    p.add_argument("--degree-bound", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("canonical", help="exceptional multiplicity of the top-form transform")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--center", default="origin", help="origin | subspace:s")
    common(p)
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.add_argument("--only", help="substring filter on check names")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
