"""``stringlinks`` command-line front end.

Exit codes: 0 success or true, 1 false, 2 parse error, 3 semantic error.
Errors print one line ``error: <reason>: <message>`` on stderr (or a JSON
object with ``error`` and ``message`` on stdout under ``--json``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bridge import cable_double, load_registry, realize
from .errors import LayerError, ParseError, StringLinkError
from .expr import evaluate, format_word, parse_expression
from .invariants import invariants_json
from .monoid import KnotWord, braid_equivalent, links_equal, normalize, symbolic_invariants
from .morse import MorseWord, format_morse, validate
from .rfgroup import braids_link_homotopic, milnor

EXIT_TRUE, EXIT_FALSE, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3


class _UsageError(Exception):
    """Malformed command-line argument; reported as a parse error."""


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, data):
        if self.as_json:
            print(json.dumps(data, sort_keys=True))
        else:
            print(text)

    def error(self, reason: str, message: str):
        message = " ".join(str(message).split())
        if self.as_json:
            print(json.dumps({"error": reason, "message": message}, sort_keys=True))
        else:
            print(f"error: {reason}: {message}", file=sys.stderr)


def _value(text: str):
    return evaluate(parse_expression(text))


def _symbolic(text: str, what: str) -> tuple:
    v = _value(text)
    if isinstance(v, MorseWord):
        raise LayerError(f"{what} takes a symbolic expression, got a Morse literal")
    return v


def _morse(text: str, what: str) -> MorseWord:
    v = _value(text)
    if not isinstance(v, MorseWord):
        raise LayerError(f"{what} takes a Morse literal such as '[n=2; x+1]'")
    return v


def _predicate(out: _Out, result: bool) -> int:
    out.emit("true" if result else "false", {"result": result})
    return EXIT_TRUE if result else EXIT_FALSE


def _cmd_validate(args, out):
    v = _value(args.expr)
    if isinstance(v, tuple):
        nf = normalize(v)
        out.emit(f"valid symbolic word: {format_word(v)}", {"valid": True, "layer": "symbolic", "pure": nf.is_pure})
        return EXIT_TRUE
    t = validate(v)
    perm = list(t.endpoint_permutation)
    out.emit(f"valid {v.n}-string link; permutation {perm}; pure {str(t.is_pure).lower()}",
             {"valid": True, "layer": "morse", "n": v.n, "permutation": perm, "pure": t.is_pure})
    return EXIT_TRUE


def _cmd_invariants(args, out):
    v = _value(args.expr)
    if isinstance(v, tuple):
        inv = symbolic_invariants(v)
        data = {"two_ell": inv.two_ell, "pure": inv.pure}
        out.emit(f"two_ell {inv.two_ell}\npure {str(inv.pure).lower()}", data)
        return EXIT_TRUE
    data = invariants_json(v)
    lines = [f"doubled_lk {k} {val}" for k, val in data["doubled_lk"].items()]
    lines += [f"writhe {k} {val}" for k, val in data["writhe"].items()]
    if data["two_ell"] is not None:
        lines.append(f"two_ell {data['two_ell']}")
    out.emit("\n".join(lines), data)
    return EXIT_TRUE


def _cmd_normalize(args, out):
    nf = normalize(_symbolic(args.expr, "normalize"))
    out.emit(format_word(nf.letters()), nf.to_json())
    return EXIT_TRUE


def _cmd_eq(args, out):
    a, b = _symbolic(args.a, args.command), _symbolic(args.b, args.command)
    test = links_equal if args.command == "eq" else braid_equivalent
    return _predicate(out, test(a, b))


def _cmd_milnor(args, out):
    try:
        indices = tuple(int(x) for x in args.indices.split(",") if x.strip())
    except ValueError:
        raise _UsageError(f"--indices wants comma-separated integers, got {args.indices!r}")
    if not indices:
        raise _UsageError("--indices needs at least one index")
    value = milnor(_morse(args.expr, "milnor"), indices, args.strand)
    out.emit(str(value), {"indices": list(indices), "strand": args.strand, "milnor": value})
    return EXIT_TRUE


def _cmd_link_homotopic(args, out):
    return _predicate(out, braids_link_homotopic(_morse(args.a, "link-homotopic"), _morse(args.b, "link-homotopic")))


def _cmd_realize(args, out):
    nf = normalize(_symbolic(args.expr, "realize"))
    w = realize(nf, load_registry(args.registry))
    out.emit(format_morse(w), {"morse": format_morse(w), "two_ell": nf.twist})
    return EXIT_TRUE


def _cmd_double(args, out):
    atoms = [a.strip() for a in args.knot.split("#")]
    if any(not a for a in atoms):
        raise _UsageError(f"bad knot list {args.knot!r}")
    w = cable_double(KnotWord(tuple(a for a in atoms if a != "unknot")), args.framing, load_registry(args.registry))
    data = invariants_json(w)
    out.emit(format_morse(w), {"morse": format_morse(w), "doubled_lk": data["doubled_lk"]["1,2"]})
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON")
    common.add_argument("--registry", metavar="PATH", default=argparse.SUPPRESS,
                        help="knot registry file (default: $STRINGLINKS_REGISTRY, else built-in)")
    p = argparse.ArgumentParser(prog="stringlinks", parents=[common],
                                description="Compute with string links and the 2-string link monoid.")
    p.add_argument("--version", action="version", version=f"stringlinks {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, handler, help_, *operands):
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        for op in operands:
            sp.add_argument(op)
        sp.set_defaults(handler=handler)
        return sp

    add("validate", _cmd_validate, "check that an expression is a valid string link", "expr")
    add("invariants", _cmd_invariants, "doubled linking numbers, writhes and 2l", "expr")
    add("normalize", _cmd_normalize, "normal form of a symbolic expression", "expr")
    add("eq", _cmd_eq, "are two symbolic expressions the same link", "a", "b")
    add("braid-eq", _cmd_eq, "are two symbolic expressions braid-equivalent", "a", "b")
    m = add("milnor", _cmd_milnor, "Milnor invariant of a braid", "expr")
    m.add_argument("--indices", required=True, help="comma-separated indices, e.g. 1,2")
    m.add_argument("--strand", required=True, type=int)
    add("link-homotopic", _cmd_link_homotopic, "are two braids link-homotopic", "a", "b")
    add("realize", _cmd_realize, "Morse diagram for a symbolic expression", "expr")
    d = add("double", _cmd_double, "framed blackboard double (one-strand cable) of a knot", "knot")
    d.add_argument("--framing", required=True, type=int)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(getattr(args, "json", False))
    args.registry = getattr(args, "registry", None)
    try:
        return args.handler(args, out)
    except ParseError as exc:
        out.error(exc.reason, str(exc))
        return EXIT_PARSE
    except _UsageError as exc:
        out.error("usage", str(exc))
        return EXIT_PARSE
    except StringLinkError as exc:
        out.error(exc.reason, str(exc))
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
