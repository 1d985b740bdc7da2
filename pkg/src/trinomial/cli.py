"""Command-line front end.

Exit codes: 0 success, 1 verification or expectation failed, 2 parse or
validation error, 3 construction impossible, 4 resource limit.
"""

from __future__ import annotations

import argparse
import sys

from .construct import DEGREE_CAP, horizontal_curve, sh_curve, trivial_curve
from .errors import (
    ConstructionFailed,
    ConstructionImpossible,
    DegenerateModulus,
    LimitExceeded,
    PreconditionViolated,
    ShapeMismatch,
    ValidationError,
    VerificationFailed,
)
from .fileformat import format_curve, parse_abc, parse_curve, parse_spec
from .model import classify, torus_weights
from .verify import full_report, mason_stothers

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_IMPOSSIBLE, EXIT_LIMIT = 0, 1, 2, 3, 4


def _bool(v):
    return "true" if v else "false"


def _value(v):
    if isinstance(v, bool):
        return _bool(v)
    if v is None:
        return "none"
    if isinstance(v, tuple):
        return " ".join(map(str, v))
    return str(v)


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_spec(path):
    return parse_spec(_read(path))


def cmd_classify(args, out):
    cl = classify(_load_spec(args.spec))
    fields = ["kind", "d", "rational", "horizontal_exists", "factorial"]
    if cl.kind == 2:
        fields += ["sh_exists", "a1_poor", "platonic_triple"]
    for f in fields:
        key = "type" if f == "kind" else f
        print(f"{key} = {_value(getattr(cl, f))}", file=out)
    return EXIT_OK


def _write_curve(text, path, out):
    if path in (None, "-"):
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"written = {path}", file=out)


def cmd_construct(args, out):
    spec = _load_spec(args.spec)
    trace = None
    if args.what == "horizontal":
        curve, trace = horizontal_curve(spec, route=args.route, max_degree=args.max_degree or None)
    elif args.what == "sh":
        curve = sh_curve(spec)
    else:
        if not spec.is_surface():
            raise ValidationError("construct trivial needs a surface spec (three blocks of one exponent)")
        curve = trivial_curve(*(b[0] for b in spec.blocks))
    comments = trace.lines(curve.var) if (trace is not None and args.trace) else ()
    _write_curve(format_curve(spec, curve, comments), args.output, out)
    return EXIT_OK


_EXPECT = {"horizontal": "is_horizontal", "sh": "is_sh", "smooth": "in_smooth_locus"}


def cmd_verify(args, out):
    spec = _load_spec(args.spec)
    curve = parse_curve(_read(args.curve), spec)
    rep = full_report(spec, curve)
    for line in rep.lines():
        print(line, file=out)
    ok = rep.checks["on_hypersurface"] and rep.checks.get("nonconstant", False)
    if args.expect:
        key = _EXPECT[args.expect]
        if key not in rep.checks:
            raise ValidationError(f"--expect {args.expect} does not apply to type {spec.kind}")
        ok = ok and rep.checks[key]
        print(f"expect = {args.expect}", file=out)
    print(f"result = {'pass' if ok else 'fail'}", file=out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_weights(args, out):
    basis = torus_weights(_load_spec(args.spec))
    print(f"rank = {len(basis)}", file=out)
    for k, w in enumerate(basis, start=1):
        print(f"w{k} = {' '.join(map(str, w))}", file=out)
    return EXIT_OK


def cmd_abc(args, out):
    a, b, c = parse_abc(_read(args.file))
    rep = mason_stothers(a, b, c)
    for line in rep.lines():
        print(line, file=out)
    return EXIT_OK if rep.ok else EXIT_FAILED


def build_parser():
    p = argparse.ArgumentParser(prog="trinomial", description="Polynomial curves on trinomial hypersurfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="decide rationality, curve existence and factoriality")
    s.add_argument("spec")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("construct", help="build a curve and write it as a curve file")
    s.add_argument("what", choices=["horizontal", "sh", "trivial"])
    s.add_argument("spec")
    s.add_argument("-o", "--output", help="curve file to write (default: stdout)")
    s.add_argument("--route", choices=["pythagorean", "paper-eq3"], default="pythagorean")
    s.add_argument("--trace", action="store_true", help="add construction data as comments")
    s.add_argument(
        "--max-degree",
        type=int,
        default=DEGREE_CAP,
        help=f"refuse coprime constructions above this block degree (default {DEGREE_CAP}, 0 for no cap)",
    )
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="check a curve against a spec")
    s.add_argument("spec")
    s.add_argument("curve")
    s.add_argument("--expect", choices=sorted(_EXPECT))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("weights", help="basis of the torus weight lattice")
    s.add_argument("spec")
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("abc", help="Mason-Stothers check for a + b + c = 0")
    s.add_argument("file")
    s.set_defaults(func=cmd_abc)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ConstructionImpossible as exc:
        print(f"error = {exc}", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    except LimitExceeded as exc:
        print(f"error = {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (VerificationFailed, ConstructionFailed) as exc:
        print(f"error = {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ValidationError, ShapeMismatch, DegenerateModulus, PreconditionViolated, OSError) as exc:
        print(f"error = {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
