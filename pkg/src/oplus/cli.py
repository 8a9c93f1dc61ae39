"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 domain error. ``--json`` prints one
JSON document per call, with every number written as an exact string.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import classify as cl
from . import grouplaw as gl
from . import pell
from .exactnum import DomainError, format_coefficient


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def law_payload(law: gl.GroupLaw) -> dict[str, Any]:
    ann = gl.annihilator(law)
    out: dict[str, Any] = {
        "kind": "affine" if isinstance(law, gl.Affine) else "bilinear",
        "polynomial": gl.format_law(law),
    }
    if isinstance(law, gl.Affine):
        out["c"] = format_coefficient(law.c)
    else:
        out["a"] = format_coefficient(law.a)
        out["b"] = format_coefficient(law.b)
        out["c"] = format_coefficient(law.c)
    out["identity"] = format_coefficient(gl.identity(law))
    out["annihilator"] = None if ann is None else format_coefficient(ann)
    return out


def _witness_payload(witness: Optional[dict]) -> Optional[dict]:
    if witness is None:
        return None
    out = {}
    for key, val in witness.items():
        if key == "laws":
            out[key] = [law_payload(law) for law in val]
        else:
            out[key] = val
    return out


def cmd_solve(args) -> tuple[dict, str]:
    res = gl.solve(args.u, args.v)
    over_q = gl.is_true_over_Q(args.u, args.v, bilinear_only=args.bilinear_only)
    laws = [law_payload(law) for law in res.laws]
    if args.bilinear_only:
        laws = [law for law in laws if law["kind"] == "bilinear"]
    doc = {
        "discriminant": format_coefficient(res.discriminant),
        "field_radicand": res.field_radicand,
        "laws": laws,
        "true_over_Q": over_q,
    }
    lines = [
        f"u = {args.u}, v = {args.v}",
        f"discriminant 9 - 8u - 4v + 4uv = {res.discriminant}",
    ]
    for law in laws:
        lines.append(f"  x (+) y = {law['polynomial']}")
        lines.append(f"    identity {law['identity']}, annihilator {law['annihilator'] or 'none'}")
    if not laws:
        lines.append("  no group law over a real field")
    if over_q:
        verdict = "true over Q"
    elif res.field_radicand is not None:
        verdict = f"false over Q, true over Q(sqrt({res.field_radicand}))"
    else:
        verdict = "false over Q"
    lines.append(verdict)
    return doc, "\n".join(lines)


def cmd_classify(args) -> tuple[dict, str]:
    c = cl.classify(args.u, args.v)
    doc = {"case": c.case_name, "truth": c.truth, "witness": _witness_payload(c.witness)}
    text = f"({args.u}, {args.v}): case {c.case_name}, {'true' if c.truth else 'false'}"
    if c.witness:
        parts = []
        for k, val in doc["witness"].items():
            if k == "laws":
                val = "; ".join(law["polynomial"] for law in val)
            parts.append(f"{k}={val}")
        text += "\n  witness: " + ", ".join(parts)
    return doc, text


def cmd_enumerate(args) -> tuple[dict, str]:
    pairs = cl.enumerate_uv_for_n(args.n, args.include_negative_divisors)
    rhs = (args.n * args.n - 1) // 4
    count = cl.sigma0(rhs)
    doc = {"rhs": rhs, "pairs": [list(p) for p in pairs], "sigma0": count}
    lines = [f"(u-1)(v-2) = {rhs}"]
    lines += [f"  ({u}, {v})" for u, v in pairs]
    lines.append(f"count = σ₀({rhs}) = {count}")
    if args.include_negative_divisors:
        lines.append(f"with negative divisors: {len(pairs)} pairs")
    return doc, "\n".join(lines)


def cmd_pell(args) -> tuple[dict, str]:
    sol = pell.chakravala(args.N)
    doc = {"N": args.N, "x": str(sol.x), "y": str(sol.y), "m": sol.m}
    return doc, f"{sol.x}² − {args.N}·{sol.y}² = 1"


def cmd_chakravala_trace(args) -> tuple[dict, str]:
    steps = list(pell.chakravala_steps(args.N))
    sol = pell.chakravala(args.N)
    doc = {
        "N": args.N,
        "steps": [{"a": str(s.a), "b": str(s.b), "k": s.k, "x": s.x} for s in steps],
        "solution": {"x": str(sol.x), "y": str(sol.y)},
    }
    lines = [f"{'a':>20} {'b':>20} {'k':>6} {'x':>6}"]
    lines += [f"{s.a:>20} {s.b:>20} {s.k:>6} {s.x:>6}" for s in steps]
    if steps[-1].k == -1:
        lines.append("k = -1: composing the triple with itself")
    lines.append(f"{sol.x}² − {args.N}·{sol.y}² = 1")
    return doc, "\n".join(lines)


def cmd_mordell(args) -> tuple[dict, str]:
    res = cl.mordell_search(args.k, args.bound)
    doc = {"k": res.k, "bound": res.bound, "solutions": [list(p) for p in res.solutions]}
    lines = [f"y^2 = x^3 + {args.k}, |x| <= {args.bound}: {len(res.solutions)} points"]
    lines += [f"  ({x}, {y})" for x, y in res.solutions]
    return doc, "\n".join(lines)


def cmd_rn(args) -> tuple[dict, str]:
    sols = cl.ramanujan_nagell_search(args.t_max)
    doc = {"t_max": args.t_max, "solutions": [list(p) for p in sols]}
    lines = [f"n^2 + 7 = 2^t, t <= {args.t_max}:"]
    lines += [f"  n = {n}, t = {t}" for n, t in sols]
    return doc, "\n".join(lines)


def cmd_tseq(args) -> tuple[dict, str]:
    if args.m_max < 1:
        raise DomainError("m_max must be positive")
    rows = [(m, *pell.t_sequence(args.d, m)) for m in range(1, args.m_max + 1)]
    doc = {"d": args.d, "terms": [{"m": m, "t": str(t), "n": str(n)} for m, t, n in rows]}
    lines = [f"n^2 - {8 * args.d}*t^2 = 1"]
    lines += [f"  m = {m}: t = {t}, n = {n}" for m, t, n in rows]
    return doc, "\n".join(lines)


COMMANDS = {
    "solve": cmd_solve,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "pell": cmd_pell,
    "chakravala-trace": cmd_chakravala_trace,
    "mordell": cmd_mordell,
    "rn": cmd_rn,
    "tseq": cmd_tseq,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--bilinear-only", action="store_true", help="ignore the affine family when judging truth"
    )
    common.add_argument("--include-negative-divisors", action="store_true")
    common.add_argument("--bound", type=int, default=cl.DEFAULT_MORDELL_BOUND)

    parser = _Parser(prog="oplus", description="Polynomial group laws with 1(+)1=u and 2(+)2=v.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="all laws for (u, v)")
    p.add_argument("u", type=_rational)
    p.add_argument("v", type=_rational)
    p = sub.add_parser("classify", parents=[common], help="theorem-based classification")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p = sub.add_parser("enumerate", parents=[common], help="(u, v) with a given discriminant n^2")
    p.add_argument("n", type=int)
    p = sub.add_parser("pell", parents=[common], help="fundamental solution of x^2 - N y^2 = 1")
    p.add_argument("N", type=int)
    p = sub.add_parser("chakravala-trace", parents=[common], help="Chakravala steps")
    p.add_argument("N", type=int)
    p = sub.add_parser("mordell", parents=[common], help="integral points on y^2 = x^3 + k")
    p.add_argument("k", type=int)
    p = sub.add_parser("rn", parents=[common], help="solutions of n^2 + 7 = 2^t")
    p.add_argument("t_max", type=int)
    p = sub.add_parser("tseq", parents=[common], help="Pell sequence t_m, n_m for radicand 8d")
    p.add_argument("d", type=int)
    p.add_argument("m_max", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"oplus {args.command}: {exc}", file=sys.stderr)
        return 2
    if args.json:
        inputs = {
            k: (str(v) if isinstance(v, Fraction) else v)
            for k, v in vars(args).items()
            if k not in ("command", "json")
        }
        doc = {"command": args.command, "inputs": inputs, "result": payload}
        print(json.dumps(doc, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
