"""Command-line front end.

Exit codes: 0 on success, 1 when the input is well formed but the request
cannot be met (not representable, bad field, ...), 2 for unparsable input.
Output is plain ASCII: sqrt(3) prints as ``s``, j as ``w``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .continuants import continuant
from .errors import ContrepsError, DomainError, InvariantViolation, ParseError
from .euclid import euclidean_algorithm
from .hermitian import Form, multiplier_identity, solve_form
from .rings import PolyRing, parse_ring
from .two_squares import (
    TwoSquaresRep,
    brillhart_two_squares,
    cyclotomic_rep,
    poly_two_squares,
    smith_two_squares,
    unit_absorb,
    verify_two_squares,
)

FORM_NAMES = [f.value for f in Form]


def _int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError("expected an integer", text, 0) from None


def _sq(v) -> str:
    s = str(v)
    return f"({s})^2" if not s.isdigit() else f"{s}^2"


def _paren(v) -> str:
    s = str(v)
    return s if s.isdigit() else f"({s})"


def _form_text(form: Form, n: int, values) -> str:
    a, b, c, d = (_paren(v) for v in values)
    if form is Form.FOUR_SQUARES:
        body = f"{a}^2 + {b}^2 + {c}^2 + {d}^2"
    elif form is Form.EISENSTEIN_DOUBLE:
        body = f"{a}^2 - {a}*{b} + {b}^2 + {c}^2 - {c}*{d} + {d}^2"
    elif form is Form.X2P3Y2:
        body = f"{a}^2 + 3*{b}^2 + {c}^2 + 3*{d}^2"
    else:
        body = f"{a}^2 - 3*{b}^2 + {c}^2 - 3*{d}^2"
    return f"{n} = {body}"


def _poly_text(rep: TwoSquaresRep, lhs: str = "m") -> str:
    squares = f"{_sq(rep.x)} + {_sq(rep.y)}"
    if rep.unit == 1:
        return f"{lhs} = {squares}"
    return f"{lhs} = {_paren(rep.unit)} * ({squares})"


def _field_ring(text: str) -> PolyRing:
    F = parse_ring(text)
    if isinstance(F, PolyRing):
        return F
    return PolyRing(F)


# subcommands; each returns (text lines, json dict)


def cmd_twosq(args):
    p = _int(args.p)
    rep = brillhart_two_squares(p)
    out = {"input": p, "form": "twosq", "components": [rep.x.as_int(), rep.y.as_int()], "unit": 1}
    lines = [f"{p} = {_sq(rep.x)} + {_sq(rep.y)}"]
    if p != 2:
        Q, _ = smith_two_squares(p)
        out["quotients"] = [q.as_int() for q in Q]
        lines.append("quotients: " + " ".join(str(q) for q in Q))
    return lines, out


def _cmd_form(form: Form):
    def run(args):
        n = _int(args.n)
        mult = form.ring(args.multiplier) if args.multiplier else None
        quad, chains = solve_form(form, n, mult)
        lines = [_form_text(form, n, quad.values)]
        for ch in chains:
            lines.append("chain: " + " ".join(str(m) for m in ch.ms))
            lines.append("quotients: " + " ".join(str(q) for q in ch.qs))
        out = {"input": n, "form": form.value, "components": list(quad.values)}
        if chains:
            out["chain"] = [list(ch.ms) for ch in chains]
            out["quotients"] = [[str(q) for q in ch.qs] for ch in chains]
        return lines, out

    return run


def cmd_polytwosq(args):
    R = _field_ring(args.field)
    m = R(args.m)
    if args.z is None:
        raise DomainError("a polynomial z with m | z^2 + 1 is required; searching for one is not supported")
    z = R(args.z)
    rep = poly_two_squares(m, z)
    if args.absorb:
        rep = unit_absorb(rep)
    out = {
        "input": {"field": str(R.base), "m": str(m), "z": str(z)},
        "form": "polytwosq",
        "components": [str(rep.x), str(rep.y)],
        "unit": str(rep.unit),
    }
    return [_poly_text(rep)], out


def cmd_cyclotomic(args):
    p = _int(args.p)
    phi, x, y = cyclotomic_rep(p)
    out = {"input": p, "form": "cyclotomic", "components": [str(x), str(y)], "unit": "1"}
    return [f"Phi_{4 * p} = {phi} = {_sq(x)} + {_sq(y)}"], out


def cmd_continuant(args):
    ring = parse_ring(args.ring)
    items = [ring(e) for e in args.elements]
    value = continuant(items, ring)
    out = {"input": [str(q) for q in items], "form": "continuant", "components": [str(value)]}
    return [f"[{', '.join(str(q) for q in items)}] = {value}"], out


def cmd_euclid(args):
    ring = parse_ring(args.ring)
    a, b = ring(args.a), ring(args.b)
    trace = euclidean_algorithm(a, b)
    rems = trace.remainders
    lines = [f"{_paren(rems[k])} = {_paren(q)} * {_paren(rems[k + 1])} + {_paren(rems[k + 2])}"
             for k, q in enumerate(trace.quotients)]
    lines.append(f"gcd = {trace.gcd}")
    out = {
        "input": [str(a), str(b)],
        "form": "euclid",
        "components": [str(r) for r in rems],
        "unit": str(trace.gcd),
        "quotients": [str(q) for q in trace.quotients],
    }
    return lines, out


def cmd_multiplier(args):
    ring = parse_ring(args.ring)
    x, y = ring(args.x), ring(args.y)
    z, w = multiplier_identity(x, y)
    m = x * x.conj() + y * y.conj()
    lines = [f"z = {z}", f"({z})*conj({z}) + 1 = ({w}) * ({m})"]
    out = {"input": [str(x), str(y)], "form": "multiplier", "components": [str(z), str(w)], "unit": str(m)}
    return lines, out


def cmd_verify(args):
    form = args.form
    comps = args.components
    if form == "polytwosq":
        if args.field is None:
            raise ParseError("verify polytwosq needs --field")
        R = _field_ring(args.field)
        if len(comps) != 2:
            raise ParseError("polytwosq takes two components")
        rep = TwoSquaresRep(R(comps[0]), R(comps[1]), R(args.unit or "1"))
        ok, target = verify_two_squares(R(args.n), rep), args.n
        value = rep.value()
    else:
        n = _int(args.n)
        vals = [_int(c) for c in comps]
        target = n
        if form == "twosq":
            if len(vals) != 2:
                raise ParseError("twosq takes two components")
            value = vals[0] ** 2 + vals[1] ** 2
        else:
            if len(vals) != 4:
                raise ParseError(f"{form} takes four components")
            value = Form(form).evaluate(vals)
        ok = value == n
    out = {"input": args.n, "form": form, "components": list(comps), "valid": ok}
    line = "ok" if ok else f"mismatch: {value} != {target}"
    if not ok:
        raise _Mismatch(line, out)
    return [line], out


class _Mismatch(DomainError):
    def __init__(self, message, payload):
        super().__init__(message)
        self.payload = payload


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print a JSON object")

    parser = argparse.ArgumentParser(prog="contreps", description="Sums of squares via continuants.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("twosq", parents=[common], help="p = x^2 + y^2 for a prime p")
    p.add_argument("p")
    p.set_defaults(func=cmd_twosq)

    helps = {
        Form.FOUR_SQUARES: "n = x^2 + y^2 + z^2 + u^2",
        Form.EISENSTEIN_DOUBLE: "n = x^2 - xy + y^2 + z^2 - zu + u^2",
        Form.X2P3Y2: "n = x^2 + 3y^2 + z^2 + 3u^2",
        Form.SQRT3_DOUBLE: "n = x^2 - 3y^2 + z^2 - 3u^2",
    }
    for form, text in helps.items():
        p = sub.add_parser(form.value, parents=[common], help=text)
        p.add_argument("n")
        p.add_argument("--multiplier", help="start the descent from this z (needs n | N(z) + 1)")
        p.set_defaults(func=_cmd_form(form))

    p = sub.add_parser("polytwosq", parents=[common], help="m = u (x^2 + y^2) over Q[X] or F_p[X]")
    p.add_argument("--field", required=True, help="Q or F:p")
    p.add_argument("--absorb", action="store_true", help="fold the unit into the squares when possible")
    p.add_argument("m")
    p.add_argument("z", nargs="?")
    p.set_defaults(func=cmd_polytwosq)

    p = sub.add_parser("cyclotomic", parents=[common], help="Phi_4p as a sum of two squares")
    p.add_argument("p")
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("continuant", parents=[common], help="continuant of a sequence")
    p.add_argument("--ring", required=True)
    p.add_argument("elements", nargs="*")
    p.set_defaults(func=cmd_continuant)

    p = sub.add_parser("euclid", parents=[common], help="Euclidean algorithm trace")
    p.add_argument("--ring", required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_euclid)

    p = sub.add_parser("multiplier", parents=[common], help="z with x x* + y y* dividing z z* + 1")
    p.add_argument("--ring", required=True)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("verify", parents=[common], help="check a representation")
    p.add_argument("form", choices=["twosq", "polytwosq", *FORM_NAMES])
    p.add_argument("n")
    p.add_argument("components", nargs="+")
    p.add_argument("--field")
    p.add_argument("--unit")
    p.set_defaults(func=cmd_verify)
    return parser


_OPTIONS = {"-h"}


def _protect_negatives(argv: list[str]) -> list[str]:
    # argparse reads "-1+i" or "-X^2" as an option; a leading space keeps it positional
    return [f" {a}" if a.startswith("-") and not a.startswith("--") and a not in _OPTIONS and len(a) > 1 else a
            for a in argv]


def _emit(lines, payload, as_json: bool, stream) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True), file=stream)
    else:
        for line in lines:
            print(line, file=stream)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False)
    try:
        lines, payload = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _Mismatch as exc:
        _emit([str(exc)], exc.payload, as_json, sys.stdout)
        return 1
    except (DomainError, InvariantViolation, ContrepsError) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    _emit(lines, payload, as_json, sys.stdout)
    return 0


def run(argv: list[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
