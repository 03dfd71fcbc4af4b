"""Plain-text graph files and DOT export.

A graph file looks like::

    # binary words without 11
    alphabet: 0 1
    vertices: g0 g1
    initial: g0
    edge: g0 0 g0
    edge: g0 1 g1
    edge: g1 0 g0

Names are whitespace-free tokens; declaration order of the alphabet fixes
the symbol order.  An empty ``initial:`` with no vertices is the empty set.
"""

from __future__ import annotations

from .core import PathSet, Presentation, PresentationError, validate

__all__ = ["GraphFileError", "parse", "dumps", "to_dict", "to_dot", "load"]


class GraphFileError(PresentationError):
    pass


_SINGLE = ("alphabet", "vertices", "initial")


def parse(text: str) -> Presentation:
    seen: dict[str, list[str]] = {}
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise GraphFileError(f"line {lineno}: expected 'key: value'")
        tokens = rest.split()
        if key == "edge":
            if len(tokens) != 3:
                raise GraphFileError(f"line {lineno}: edge needs SRC SYMBOL DST")
            edges.append(tuple(tokens))
        elif key in _SINGLE:
            if key in seen:
                raise GraphFileError(f"line {lineno}: repeated '{key}' line")
            seen[key] = tokens
        else:
            raise GraphFileError(f"line {lineno}: unknown key '{key}'")
    for key in _SINGLE:
        if key not in seen:
            raise GraphFileError(f"missing '{key}' line")
    if len(seen["initial"]) > 1:
        raise GraphFileError("'initial' takes one vertex name")
    return validate(
        {
            "alphabet": seen["alphabet"],
            "vertices": seen["vertices"],
            "edges": edges,
            "initial": seen["initial"][0] if seen["initial"] else None,
        }
    )


def load(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _pres(p) -> Presentation:
    return p.presentation if isinstance(p, PathSet) else p


def dumps(p) -> str:
    p = _pres(p)
    lines = [
        "alphabet: " + " ".join(p.alphabet),
        "vertices: " + " ".join(p.vertices),
        "initial: " + ("" if p.is_empty else p.vertices[p.initial]),
    ]
    lines += [f"edge: {s} {a} {t}" for s, a, t in p.named_edges()]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def to_dict(p) -> dict:
    p = _pres(p)
    return {
        "alphabet": list(p.alphabet),
        "vertices": list(p.vertices),
        "initial": None if p.is_empty else p.vertices[p.initial],
        "edges": [list(e) for e in p.named_edges()],
    }


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p, name: str = "pathset") -> str:
    """Graphviz digraph; the marked vertex is drawn as a double circle."""
    p = _pres(p)
    out = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for i, v in enumerate(p.vertices):
        shape = "doublecircle" if i == p.initial else "circle"
        out.append(f"  {_quote(v)} [shape={shape}];")
    for s, a, t in p.named_edges():
        out.append(f"  {_quote(s)} -> {_quote(t)} [label={_quote(a)}];")
    out.append("}")
    return "\n".join(out) + "\n"
