"""Command-line front door.

Every subcommand reads at most one JSON document (``--in FILE`` or stdin)
and writes one JSON document with sorted keys.  Exit status is 0 on
success, 1 when a harness property fails and 2 on bad input.

Input documents:

* ``extend``    ``{"point": P}`` | ``{"line": L}`` | ``{"pencil": A}`` | ``{"vline": V}``
* ``join``      ``{"a": E, "b": E}``
* ``meet``      ``{"lambda": M, "mu": M}``
* ``incident``  ``{"epoint": E, "eline": M}``
* ``classify``  ``{"pencil": A}`` or a bare pencil

where an e-point ``E`` is a pencil, ``{"point": P}`` or ``{"tip": L}``, and
an e-line ``M`` is a v-line, ``{"line": L}`` or ``{"infinity": true}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import backends
from . import extension as ex
from . import gf
from . import harness
from . import lazy
from . import pencil as pc
from . import serialize as ser
from . import vline as vl
from .decision import DEFAULT_BUDGET
from .plane import GeometryError, Plane


class InputError(Exception):
    """Bad input; ``kind`` names the category in the error document."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


# documents


def _epoint(plane, doc, k):
    if isinstance(doc, dict) and "point" in doc:
        return ex.proper_epoint(plane, ser.point_from_json(plane, doc["point"]))
    if isinstance(doc, dict) and "tip" in doc:
        return ex.tip(plane, ex.proper_eline(plane, ser.line_from_json(plane, doc["tip"])))
    return ex.epoint(plane, ser.pencil_from_json(plane, doc), k)


def _eline(plane, doc, k):
    if isinstance(doc, dict) and doc.get("infinity") is True:
        return ex.line_at_infinity()
    if isinstance(doc, dict) and "line" in doc and "state" not in doc:
        return ex.proper_eline(plane, ser.line_from_json(plane, doc["line"]))
    return ex.eline(plane, ser.vline_from_json(plane, doc), k)


def _describe_epoint(plane, e, k):
    out = {"epoint": ser.epoint_to_json(plane, e)}
    out.update(ser.classification_to_json(plane, pc.classify(plane, e.rep, k)))
    return out


def _describe_eline(plane, lam, k):
    out = {"eline": ser.eline_to_json(plane, lam)}
    r = vl.resolve(plane, lam.root, k)
    if isinstance(r, vl.Unresolved):
        out.update(classification="undetermined", budget=r.budget)
    elif isinstance(r, vl.EmptyLine):
        out["classification"] = "infinity"
    else:
        out.update(classification="proper", line=ser.line_to_json(plane, r))
    return out


def _need(doc, *names):
    if not isinstance(doc, dict):
        raise ser.SchemaError(f"expected a JSON object, got {type(doc).__name__}")
    missing = [n for n in names if n not in doc]
    if missing:
        raise ser.SchemaError(f"missing field(s) {', '.join(map(repr, missing))}")
    return [doc[n] for n in names]


# subcommands


def cmd_extend(args, plane, doc):
    k = args.budget
    if isinstance(doc, dict) and "line" in doc:
        return 0, _describe_eline(plane, ex.proper_eline(plane, ser.line_from_json(plane, doc["line"])), k)
    if isinstance(doc, dict) and "vline" in doc:
        return 0, _describe_eline(plane, ex.eline(plane, ser.vline_from_json(plane, doc["vline"]), k), k)
    if isinstance(doc, dict) and "point" in doc:
        return 0, _describe_epoint(plane, ex.proper_epoint(plane, ser.point_from_json(plane, doc["point"])), k)
    if isinstance(doc, dict) and "pencil" in doc:
        return 0, _describe_epoint(plane, ex.epoint(plane, ser.pencil_from_json(plane, doc["pencil"]), k), k)
    raise ser.SchemaError("extend expects one of 'point', 'line', 'pencil', 'vline'")


def cmd_join(args, plane, doc):
    k = args.budget
    a, b = _need(doc, "a", "b")
    e1, e2 = _epoint(plane, a, k), _epoint(plane, b, k)
    d = ex.epoint_distinct(plane, e1, e2, k)
    if not d.yes:
        raise GeometryError(f"join requires distinct e-points; distinctness is {d.value} at budget {k}")
    return 0, _describe_eline(plane, ex.join(plane, e1, e2, k), k)


def cmd_meet(args, plane, doc):
    k = args.budget
    l1, l2 = _need(doc, "lambda", "mu")
    return 0, _describe_epoint(plane, ex.meet(plane, _eline(plane, l1, k), _eline(plane, l2, k), k), k)


def cmd_incident(args, plane, doc):
    k = args.budget
    ed, ld = _need(doc, "epoint", "eline")
    e, lam = _epoint(plane, ed, k), _eline(plane, ld, k)
    out = _describe_epoint(plane, e, k)
    out["eline"] = ser.eline_to_json(plane, lam)
    out["incident"] = ex.incident_e(plane, e, lam, k).to_json()
    out["outside"] = ex.outside_e(plane, e, lam, k).to_json()
    return 0, out


def cmd_classify(args, plane, doc):
    k = args.budget
    body = doc["pencil"] if isinstance(doc, dict) and "pencil" in doc else doc
    alpha = ser.pencil_from_json(plane, body)
    out = {"pencil": ser.pencil_to_json(plane, alpha)}
    out.update(ser.classification_to_json(plane, pc.classify(plane, alpha, k)))
    return 0, out


def cmd_axioms(args, plane, doc):
    B = plane.backend
    if isinstance(B, backends.FiniteBackend):
        if B.q not in (2, 3, 4, 5):
            raise InputError("unsupported_backend", f"finite axioms run for q in 2..5, got {B.q}")
        rep = harness.check_finite_projective(B.q)
    elif isinstance(B, backends.RationalBackend):
        if args.samples < 1:
            raise InputError("input_error", "--samples must be positive")
        rep = harness.check_rational_suite(args.samples, args.seed, plane=plane)
    else:
        raise InputError("unsupported_backend", "axioms needs a decidable backend; use 'demo' for lazy reals")
    return (0 if rep.ok else 1), rep.to_json()


def cmd_oracle(args, plane, doc):
    q = args.q if args.q is not None else getattr(plane.backend, "q", None)
    if q is None:
        raise InputError("input_error", "oracle needs --q N")
    if q not in gf.SUPPORTED:
        raise InputError("unsupported_backend", f"unsupported field order {q}; choose from {gf.SUPPORTED}")
    rep = harness.compare_with_pg_oracle(q)
    return (0 if rep.ok else 1), rep.to_json()


def cmd_demo(args, plane, doc):
    name = harness.ALIASES.get(args.scenario, args.scenario)
    if name not in harness.SCENARIOS:
        raise InputError("input_error", f"unknown scenario {args.scenario!r}; choose from {list(harness.SCENARIOS)}")
    if args.max_budget < 1:
        raise InputError("input_error", "--max-budget must be positive")
    rep = harness.demonstrate_undecidability(name, args.max_budget)
    return (0 if rep.ok else 1), rep.to_json()


COMMANDS = {
    "extend": (cmd_extend, True),
    "join": (cmd_join, True),
    "meet": (cmd_meet, True),
    "incident": (cmd_incident, True),
    "classify": (cmd_classify, True),
    "axioms": (cmd_axioms, False),
    "oracle": (cmd_oracle, False),
    "demo": (cmd_demo, False),
}


# plumbing


def _common():
    # defaults are suppressed so a flag given before the subcommand survives
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--backend", default=argparse.SUPPRESS, help="rational | gf:q | lazy (default rational)")
    p.add_argument("--budget", type=int, default=argparse.SUPPRESS, help=f"refinement budget (default {DEFAULT_BUDGET})")
    p.add_argument("--l0", default=argparse.SUPPRESS, help='distinguished line "a,b,c" (default "0,1,0")')
    p.add_argument("--in", dest="infile", default=argparse.SUPPRESS, help="input JSON file (default stdin)")
    p.add_argument("--out", default=argparse.SUPPRESS, help="output file (default stdout)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="projext", parents=[common],
                                     description="Constructive projective extension of an affine plane.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("extend", "join", "meet", "incident", "classify"):
        sub.add_parser(name, parents=[common])
    ax = sub.add_parser("axioms", parents=[common])
    ax.add_argument("--q", type=int)
    ax.add_argument("--samples", type=int, default=1000)
    ax.add_argument("--seed", type=int, default=1)
    orc = sub.add_parser("oracle", parents=[common])
    orc.add_argument("--q", type=int)
    demo = sub.add_parser("demo", parents=[common])
    demo.add_argument("--scenario", required=True)
    demo.add_argument("--max-budget", type=int, default=200)
    return parser


def _fill_defaults(args):
    for name, value in (("backend", "rational"), ("budget", DEFAULT_BUDGET), ("l0", None),
                        ("infile", None), ("out", None)):
        if not hasattr(args, name):
            setattr(args, name, value)


def _plane(args):
    sel = args.backend
    if sel == "gf":
        if getattr(args, "q", None) is None:
            raise InputError("unsupported_backend", "backend 'gf' needs a field order: use gf:q or --q N")
        sel = f"gf:{args.q}"
    try:
        B = backends.get(sel)
    except ValueError as exc:
        raise InputError("unsupported_backend", str(exc)) from None
    if args.budget < 0:
        raise InputError("input_error", "--budget must be non-negative")
    l0 = None
    if args.l0 is not None:
        parts = [s.strip() for s in args.l0.split(",")]
        if len(parts) != 3:
            raise InputError("input_error", f"--l0 needs three comma-separated coefficients, got {args.l0!r}")
        try:
            l0 = ser.line_from_json(Plane(B, budget=args.budget), [_token(s) for s in parts])
        except (ValueError, lazy.LazyError) as exc:
            if isinstance(exc, GeometryError):
                raise InputError("degenerate_geometry", f"--l0: {exc}") from None
            raise InputError("input_error", f"--l0: {exc}") from None
    return Plane(B, l0=l0, budget=args.budget)


def _token(s):
    try:
        return int(s)
    except ValueError:
        return s


def _read(args):
    try:
        if args.infile is None:
            text = sys.stdin.read()
        else:
            with open(args.infile, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError("input_error", f"cannot read input: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("malformed_json", f"malformed JSON: {exc}") from None


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def execute(args, stdin=None):
    """``(exit status, JSON document)`` for parsed arguments."""
    _fill_defaults(args)
    fn, reads = COMMANDS[args.command]
    old = sys.stdin
    if stdin is not None:
        sys.stdin = stdin
    try:
        plane = _plane(args)
        doc = _read(args) if reads else None
        return fn(args, plane, doc)
    except InputError as exc:
        return 2, {"error": exc.kind, "message": str(exc)}
    except ser.SchemaError as exc:
        return 2, {"error": "schema_error", "message": f"invalid input document: {exc}"}
    except GeometryError as exc:
        return 2, {"error": "degenerate_geometry", "message": str(exc)}
    except (lazy.LazyError, ValueError, ZeroDivisionError) as exc:
        return 2, {"error": "bad_scalar", "message": f"invalid scalar: {exc}"}
    finally:
        sys.stdin = old


def run(argv=None, stdin=None):
    return execute(build_parser().parse_args(argv), stdin)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status, doc = execute(args)
    text = dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if status == 2:
        sys.stderr.write(f"error: {doc['message']}\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
