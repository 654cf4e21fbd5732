"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (the error class name and
message go to stderr), 2 on a usage error.  JSON output is canonical: keys
sorted, no whitespace, floats with 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Sequence, TextIO

from . import additive, complex_autos as ca, ff, ff_autos, real
from .errors import AutomorphismError, MalformedSpec
from .hom import check_hom, parse_spec


# ---------------------------------------------------------------------------
# canonical output


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    x = x + 0.0
    return format(x, ".17g")


def canonical_json(obj: Any) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ",".join(f"{json.dumps(str(k))}:{canonical_json(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(canonical_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def fmt_complex(z: complex) -> str:
    re, im = z.real + 0.0, z.imag + 0.0
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    return f"{fmt_float(re)}{sign}{fmt_float(abs(im))}i"


def _complex_params(f: ca.ComplexAuto) -> dict:
    return {"re_alpha": float(f.a), "im_alpha": float(f.b), "conj": f.u}


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors by raising instead of exiting."""

    def error(self, message):
        raise _UsageError(self.format_usage() + f"{self.prog}: error: {message}\n")


class _UsageError(Exception):
    pass


def _family(sub: argparse.ArgumentParser, ff_allowed: bool = True) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--real", dest="family", action="store_const", const="real",
                       help="continuous automorphisms of (R, *)")
    group.add_argument("--complex", dest="family", action="store_const", const="complex",
                       help="continuous automorphisms of (C, *)")
    if ff_allowed:
        group.add_argument("--ff", dest="family", action="store_const", const="ff",
                           help="multiplicative automorphisms of GF(p^n)")


def _field_args(sub: argparse.ArgumentParser, required: bool = False) -> None:
    sub.add_argument("--p", type=int, required=required, help="field characteristic")
    sub.add_argument("--n", type=int, default=1, help="extension degree (default 1)")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")

    parser = _Parser(
        prog="multauto",
        description="Multiplicative automorphisms of R, C and finite fields.",
    )
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subs.add_parser("eval", parents=[common], help="evaluate an automorphism at a point",
                        description="Evaluate eps_alpha (--real), eps_{alpha,u} (--complex) "
                                    "or x -> x^k (--ff, x given by canonical index).")
    _family(p)
    p.add_argument("--alpha", type=float, help="real parameter (--real)")
    p.add_argument("--x", help="point: real number (--real) or element index (--ff)")
    p.add_argument("--alpha-re", type=float, help="Re(alpha) (--complex)")
    p.add_argument("--alpha-im", type=float, default=0.0, help="Im(alpha) (--complex)")
    p.add_argument("--conj", type=int, choices=(1, -1), default=1, help="u = +1 or -1 (--complex)")
    p.add_argument("--z-re", type=float, default=0.0)
    p.add_argument("--z-im", type=float, default=0.0)
    p.add_argument("--exponent", type=int, help="power-map exponent (--ff)")
    _field_args(p)

    p = subs.add_parser("compose", parents=[common], help="compose two automorphisms (F after G)",
                        description="--real A B: parameters; --complex F G: JSON documents; "
                                    "--ff K1 K2 with --p/--n: exponents.")
    _family(p)
    p.add_argument("f")
    p.add_argument("g")
    _field_args(p)

    p = subs.add_parser("invert", parents=[common], help="inverse automorphism")
    _family(p)
    p.add_argument("f")
    _field_args(p)

    p = subs.add_parser("classify", parents=[common], help="component and subgroup flags")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--complex", dest="family", action="store_const", const="complex")
    p.add_argument("f", help="complex automorphism JSON")

    p = subs.add_parser("ff-enum", parents=[common], help="enumerate automorphisms of GF(p^n)")
    _field_args(p, required=True)
    p.add_argument("--frobenius", action="store_true", help="also list the Frobenius subgroup")

    p = subs.add_parser("check-hom", parents=[common], help="sampled homomorphism report",
                        description="SPEC is a JSON document with kind real, complex, or a "
                                    "finite-field document {\"field\": ..., \"exponent\": k}.")
    p.add_argument("spec")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = subs.add_parser("table", parents=[common],
                        help="composition table of {identity, conjugation, eps_2, conj eps_2}")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--complex", dest="family", action="store_const", const="complex")

    p = subs.add_parser("bridge", parents=[common], help="additive <-> multiplicative transport")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-mult", dest="direction", action="store_const", const="to",
                       help="SPEC is a lattice-fixing additive automorphism")
    group.add_argument("--from-mult", dest="direction", action="store_const", const="from",
                       help="SPEC is a complex multiplicative automorphism")
    p.add_argument("spec")

    p = subs.add_parser("check-lattice", parents=[common],
                        help="windowed check that an additive map fixes 2 pi i Z",
                        description="SPEC kinds: additive-lattice {eta, alpha_re, alpha_im} or "
                                    "additive {alpha_re, alpha_im, beta_re, beta_im}.")
    p.add_argument("spec")
    p.add_argument("--k-max", type=int, default=16)
    return parser


# ---------------------------------------------------------------------------
# command handlers; each returns (text, json-able payload)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise _UsageError(f"{args.command}: missing required option(s) {flags}\n")


def _parse_float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise _UsageError(f"expected a number, got {text!r}\n") from None


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"expected an integer, got {text!r}\n") from None


def _field(args) -> ff.FiniteField:
    _need(args, "p")
    return ff.make_field(args.p, args.n)


def _complex_spec(text: str) -> ca.ComplexAuto:
    f = parse_spec(text, default_kind="complex")
    if not isinstance(f, ca.ComplexAuto):
        raise MalformedSpec(f"expected a complex automorphism, got {type(f).__name__}")
    return f


def _elem_payload(x: ff.FieldElement) -> tuple[str, dict]:
    return repr(x), {"coeffs": list(x.coeffs), "index": x.index}


def cmd_eval(args):
    if args.family == "real":
        _need(args, "alpha", "x")
        value = real.eval_real(real.RealAuto(args.alpha), _parse_float(args.x))
        return fmt_float(value), {"value": value}
    if args.family == "complex":
        _need(args, "alpha_re")
        f = ca.ComplexAuto(args.alpha_re, args.alpha_im, args.conj)
        w = ca.eval_complex(f, complex(args.z_re, args.z_im))
        return fmt_complex(w), {"re": w.real, "im": w.imag}
    _need(args, "exponent", "x")
    field = _field(args)
    auto = ff_autos.power_automorphism(field, args.exponent)
    return _elem_payload(ff_autos.apply(auto, field.element(_parse_int(args.x))))


def cmd_compose(args):
    if args.family == "real":
        h = real.compose_real(real.RealAuto(_parse_float(args.f)), real.RealAuto(_parse_float(args.g)))
        return fmt_float(h.alpha), h.to_json()
    if args.family == "complex":
        h = ca.star_compose(_complex_spec(args.f), _complex_spec(args.g))
        return canonical_json(_complex_params(h)), h.to_json()
    field = _field(args)
    h = ff_autos.compose(ff_autos.power_automorphism(field, _parse_int(args.f)),
                         ff_autos.power_automorphism(field, _parse_int(args.g)))
    return str(h.exponent), h.to_json()


def cmd_invert(args):
    if args.family == "real":
        h = real.invert_real(real.RealAuto(_parse_float(args.f)))
        return fmt_float(h.alpha), h.to_json()
    if args.family == "complex":
        h = ca.invert_auto(_complex_spec(args.f))
        return canonical_json(_complex_params(h)), h.to_json()
    field = _field(args)
    h = ff_autos.invert(ff_autos.power_automorphism(field, _parse_int(args.f)))
    return str(h.exponent), h.to_json()


def cmd_classify(args):
    f = _complex_spec(args.f)
    report = {
        "component": ca.component_of(f).value,
        "rotation_like": ca.is_rotation_like(f),
        "commutes_with_conjugation": ca.commutes_with_conjugation(f),
        "increasing_on_reals": ca.is_increasing_on_reals(f),
    }
    text = "\n".join(f"{k}: {canonical_json(v) if isinstance(v, bool) else v}" for k, v in report.items())
    return text, report


def cmd_ff_enum(args):
    field = _field(args)
    exps = [a.exponent for a in ff_autos.enumerate_mult_autos(field)]
    phi = ff.euler_phi(field.q - 1)
    payload = {"field": field.to_json(), "exponents": exps, "phi": phi}
    lines = [f"field: p={field.p} n={field.n} q={field.q} modulus={list(field.modulus)}",
             "exponents: " + " ".join(map(str, exps)),
             f"phi={phi}"]
    if args.frobenius:
        frob = [a.exponent for a in ff_autos.frobenius_subgroup(field)]
        payload["frobenius"] = frob
        lines.append("frobenius: " + " ".join(map(str, frob)))
    return "\n".join(lines), payload


def cmd_check_hom(args):
    report = check_hom(args.spec, samples=args.samples, seed=args.seed)
    lines = [f"kind: {report['kind']}",
             f"samples: {report['samples']}",
             f"seed: {report['seed']}",
             f"max_rel_deviation: {fmt_float(report['max_rel_deviation'])}"]
    lines += [f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in report["fixed_points"].items()]
    return "\n".join(lines), report


TABLE_ELEMENTS = [
    ("id", ca.identity_auto()),
    ("conj", ca.conjugation_auto()),
    ("eps2", ca.ComplexAuto(2.0, 0.0, 1)),
    ("conj_eps2", ca.ComplexAuto(2.0, 0.0, -1)),
]


def _triple_str(f: ca.ComplexAuto) -> str:
    return f"({fmt_float(float(f.a))},{fmt_float(float(f.b))},{'+1' if f.u == 1 else '-1'})"


def cmd_table(args):
    names = {f: name for name, f in TABLE_ELEMENTS}
    autos = [f for _, f in TABLE_ELEMENTS]
    rows = ca.composition_table(autos)
    cells = [[names.get(h, _triple_str(h)) for h in row] for row in rows]
    width = max(len(c) for row in cells for c in row + [n for n, _ in TABLE_ELEMENTS])
    header = " " * width + " | " + " ".join(n.ljust(width) for n, _ in TABLE_ELEMENTS)
    lines = [header.rstrip(), "-" * len(header.rstrip())]
    for (name, _), row in zip(TABLE_ELEMENTS, cells):
        lines.append((name.ljust(width) + " | " + " ".join(c.ljust(width) for c in row)).rstrip())
    payload = {
        "elements": [{"name": n, **_complex_params(f)} for n, f in TABLE_ELEMENTS],
        "table": [[_complex_params(h) for h in row] for row in rows],
    }
    return "\n".join(lines), payload


def cmd_bridge(args):
    if args.direction == "to":
        f = parse_spec(args.spec, default_kind="additive-lattice")
        if not isinstance(f, additive.LatticeFixingAdditiveAuto):
            raise MalformedSpec(f"expected a lattice-fixing additive automorphism, got {type(f).__name__}")
        g = additive.to_multiplicative(f)
        return canonical_json(_complex_params(g)), g.to_json()
    g = _complex_spec(args.spec)
    f = additive.from_multiplicative(g)
    return canonical_json(f.to_json()), f.to_json()


def cmd_check_lattice(args):
    f = parse_spec(args.spec, default_kind="additive-lattice")
    if not isinstance(f, (additive.LatticeFixingAdditiveAuto, additive.ComplexAdditiveAuto)):
        raise MalformedSpec(f"expected an additive automorphism, got {type(f).__name__}")
    if args.k_max < 1:
        raise _UsageError("--k-max must be >= 1\n")
    ok = additive.fixes_lattice(f, args.k_max)
    return canonical_json(ok), {"fixes_lattice": ok, "k_max": args.k_max}


HANDLERS = {
    "eval": cmd_eval,
    "compose": cmd_compose,
    "invert": cmd_invert,
    "classify": cmd_classify,
    "ff-enum": cmd_ff_enum,
    "check-hom": cmd_check_hom,
    "table": cmd_table,
    "bridge": cmd_bridge,
    "check-lattice": cmd_check_lattice,
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            # --help exits 0 after printing
            return int(exc.code or 0)
        text, payload = HANDLERS[args.command](args)
    except _UsageError as exc:
        stderr.write(str(exc))
        return 2
    except AutomorphismError as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    if args.format == "json":
        stdout.write(canonical_json(payload) + "\n")
    else:
        stdout.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
