"""Command-line front end: ``pathsets SUBCOMMAND [options] FILE...``.

Predicate subcommands print ``true``/``false`` and exit 0/1.  Usage, parse
and validation errors exit 2 with a message on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graphfile
from .core import EmptyPathSet, PathSet, PresentationError, equals, initial_blocks, minimize
from .decimation import decimate, full_decimation_set, kernel, shift
from .factorization import (
    INFINITE,
    complete_factorization,
    factorization_exponent,
    is_leveled,
    leveled_envelope,
    missing_configuration,
    self_loop_criterion,
)
from .interleaving import (
    NotFactorizable,
    interleave,
    interleaving_closure,
    interleaving_factors,
    is_n_factorizable,
)

__all__ = ["run", "main"]

# subcommand -> (number of files, flags used)
COMMANDS = {
    "minimize": (1, ()),
    "eq": (2, ()),
    "blocks": (1, ("L",)),
    "shift": (1, ("k",)),
    "decimate": (1, ("j", "n")),
    "decset": (1, ()),
    "kernel": (1, ("n",)),
    "interleave": ("+", ()),
    "closure": (1, ("n",)),
    "factorizable": (1, ("n",)),
    "factors": (1, ("n",)),
    "exponent": (1, ()),
    "envelope": (1, ()),
    "leveled": (1, ()),
    "missing": (1, ()),
    "tree": (1, ()),
    "selfloop": (1, ()),
    "dot": (1, ()),
}

PREDICATES = {"eq", "factorizable", "leveled", "selfloop"}

_DEFAULTS = {"n": 2, "j": 0, "k": 1, "L": 4}


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathsets", description="Algebra of path sets.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")
    for name, (nfiles, flags) in COMMANDS.items():
        sp = sub.add_parser(name)
        sp.add_argument("files", nargs=nfiles, metavar="FILE")
        for flag in flags:
            sp.add_argument(f"-{flag}", type=int, default=_DEFAULTS[flag])
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def _word(block, alphabet) -> str:
    if not block:
        return "ε"
    sep = "" if all(len(s) == 1 for s in alphabet) else " "
    return sep.join(block)


def _numbered(items) -> str:
    chunks = [f"# {i}\n" + graphfile.dumps(q) for i, q in enumerate(items, 1)]
    return "---\n".join(chunks)


def _tree_dict(node) -> dict:
    d = {"status": node.status, "vertices": len(node.value)}
    if node.status == "factored":
        d["n"] = node.n
        d["children"] = [_tree_dict(c) for c in node.children]
    elif node.status == "leveled":
        d["profile"] = {
            "preperiod": [list(a) for a in node.profile.preperiod],
            "period": [list(a) for a in node.profile.period],
        }
    d["graph"] = graphfile.to_dict(node.value)
    return d


def _execute(args):
    """Return (text, json-able result, exit status)."""
    cmd = args.command
    pres = [graphfile.load(f) for f in args.files]
    if cmd == "dot":
        text = graphfile.to_dot(pres[0])
        return text, text, 0
    sets = [minimize(p) for p in pres]
    p = sets[0]

    def graph(q: PathSet):
        return graphfile.dumps(q), graphfile.to_dict(q), 0

    def listing(qs):
        return _numbered(qs), [graphfile.to_dict(q) for q in qs], 0

    def predicate(flag: bool):
        return ("true" if flag else "false") + "\n", flag, 0 if flag else 1

    if cmd == "minimize":
        return graph(p)
    if cmd == "eq":
        return predicate(equals(sets[0], sets[1]))
    if cmd == "blocks":
        if args.L < 0:
            raise ValueError("depth must be nonnegative")
        order = {s: i for i, s in enumerate(p.alphabet)}
        blocks = sorted(
            initial_blocks(p, args.L), key=lambda w: (len(w), [order[s] for s in w])
        )
        text = "".join(_word(w, p.alphabet) + "\n" for w in blocks)
        return text, [list(w) for w in blocks], 0
    if cmd == "shift":
        return graph(shift(p, args.k))
    if cmd == "decimate":
        return graph(decimate(p, (args.j, args.n)))
    if cmd == "decset":
        return listing(full_decimation_set(p))
    if cmd == "kernel":
        return listing(kernel(p, args.n))
    if cmd == "interleave":
        return graph(interleave(sets))
    if cmd == "closure":
        return graph(interleaving_closure(p, args.n))
    if cmd == "factorizable":
        return predicate(is_n_factorizable(p, args.n))
    if cmd == "factors":
        return listing(interleaving_factors(p, args.n))
    if cmd == "exponent":
        f = factorization_exponent(p)
        value = "infinite" if f == INFINITE else f
        return f"{value}\n", value, 0
    if cmd == "envelope":
        return graph(leveled_envelope(p))
    if cmd == "leveled":
        return predicate(is_leveled(p))
    if cmd == "missing":
        mc = missing_configuration(p)
        if mc is None:
            return "none\n", None, 0
        text = f"k={mc.k} l={mc.ell} block={_word(mc.block, p.alphabet)}\n"
        return text, {"k": mc.k, "l": mc.ell, "block": list(mc.block)}, 0
    if cmd == "tree":
        tree = complete_factorization(p)
        return "\n".join(tree.lines()) + "\n", _tree_dict(tree), 0
    if cmd == "selfloop":
        return predicate(self_loop_criterion(p))
    raise AssertionError(cmd)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, result, status = _execute(args)
    except (PresentationError, EmptyPathSet, NotFactorizable, ValueError, OSError) as exc:
        err.write(f"pathsets {args.command}: {exc}\n")
        return 2
    if args.json:
        out.write(json.dumps({"op": args.command, "result": result}, ensure_ascii=False) + "\n")
    else:
        out.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
