"""Pointed labeled graphs and their canonical minimal right-resolving form.

A path set is the set of label sequences of one-sided infinite walks that
start at a marked vertex of a finite edge-labeled directed graph.  Every
vertex counts as accepting, so two vertices present the same language iff
they are bisimilar under the partial transition function of a deterministic
presentation.  :func:`minimize` turns any presentation into the unique
(up to isomorphism) pruned, reachable, follower-separated deterministic
presentation, numbered breadth-first so that isomorphism becomes equality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Alphabet",
    "Presentation",
    "PathSet",
    "PresentationError",
    "UnknownVertex",
    "UnknownSymbol",
    "DuplicateEdgeTriple",
    "DuplicateName",
    "MissingInitial",
    "EmptyAlphabet",
    "EmptyPathSet",
    "validate",
    "prune",
    "restrict_reachable",
    "determinize",
    "is_right_resolving",
    "minimize",
    "equals",
    "initial_blocks",
    "intersection",
    "union",
    "word_path_set",
    "unify_alphabets",
]


class PresentationError(ValueError):
    """Raised for malformed graph descriptions."""


class UnknownVertex(PresentationError):
    pass


class UnknownSymbol(PresentationError):
    pass


class DuplicateEdgeTriple(PresentationError):
    pass


class DuplicateName(PresentationError):
    pass


class MissingInitial(PresentationError):
    pass


class EmptyAlphabet(PresentationError):
    pass


class EmptyPathSet(ValueError):
    """The operation is undefined on the empty path set."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of symbol names.

    Declaration order is the total order used for canonical numbering and
    every tie-break.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise EmptyAlphabet("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise DuplicateName(f"repeated symbol in alphabet {self.symbols}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownSymbol(f"symbol {name!r} not in alphabet") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i: int) -> str:
        return self.symbols[i]

    def union(self, other: "Alphabet") -> "Alphabet":
        if other.symbols == self.symbols:
            return self
        extra = tuple(s for s in other.symbols if s not in self)
        return Alphabet(self.symbols + extra) if extra else self


def unify_alphabets(alphabets: Iterable[Alphabet]) -> Alphabet:
    """Union by name, keeping first-seen order."""
    result = None
    for a in alphabets:
        result = a if result is None else result.union(a)
    if result is None:
        raise EmptyAlphabet("no alphabets to unify")
    return result


@dataclass(frozen=True)
class Presentation:
    """A pointed labeled directed graph.

    ``edges`` holds ``(source, symbol, target)`` index triples.  The empty
    presentation has no vertices and ``initial is None``.
    """

    alphabet: Alphabet
    vertices: tuple[str, ...]
    edges: frozenset[tuple[int, int, int]]
    initial: int | None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))
        m = len(self.vertices)
        if self.initial is None:
            if m:
                raise MissingInitial("nonempty presentation needs an initial vertex")
        elif not 0 <= self.initial < m:
            raise UnknownVertex(f"initial vertex index {self.initial} out of range")
        k = len(self.alphabet)
        for s, a, t in self.edges:
            if not (0 <= s < m and 0 <= t < m):
                raise UnknownVertex(f"edge {(s, a, t)} has an endpoint out of range")
            if not 0 <= a < k:
                raise UnknownSymbol(f"edge {(s, a, t)} has a symbol out of range")

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Presentation":
        return cls(alphabet, (), frozenset(), None)

    @classmethod
    def build(cls, alphabet, vertices, edges, initial) -> "Presentation":
        """Build from names: ``edges`` is an iterable of ``(src, symbol, dst)``."""
        return validate(
            {"alphabet": alphabet, "vertices": vertices, "edges": edges, "initial": initial}
        )

    @property
    def is_empty(self) -> bool:
        return self.initial is None

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.edges, key=lambda e: (e[0], e[1], e[2]))

    def named_edges(self) -> list[tuple[str, str, str]]:
        return [
            (self.vertices[s], self.alphabet[a], self.vertices[t])
            for s, a, t in self.sorted_edges()
        ]

    @cached_property
    def successors(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(symbol, target)`` pairs in tie-break order."""
        out = [[] for _ in self.vertices]
        for s, a, t in self.edges:
            out[s].append((a, t))
        return tuple(tuple(sorted(o)) for o in out)


def validate(raw: Mapping) -> Presentation:
    """Check a name-based description and return a :class:`Presentation`.

    ``raw`` has keys ``alphabet`` (symbol names), ``vertices`` (vertex names),
    ``edges`` (``(src, symbol, dst)`` name triples) and ``initial``.
    """
    alphabet = raw.get("alphabet")
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet or ()))
    vertices = tuple(raw.get("vertices") or ())
    if len(set(vertices)) != len(vertices):
        raise DuplicateName(f"repeated vertex name in {vertices}")
    vindex = {v: i for i, v in enumerate(vertices)}

    def vid(name):
        try:
            return vindex[name]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    initial = raw.get("initial")
    if initial is None:
        if vertices:
            raise MissingInitial("no initial vertex given")
        return Presentation.empty(alphabet)
    if initial not in vindex:
        raise MissingInitial(f"initial vertex {initial!r} is not among the vertices")
    init = vindex[initial]

    edges = set()
    for src, sym, dst in raw.get("edges") or ():
        triple = (vid(src), alphabet.index(sym), vid(dst))
        if triple in edges:
            raise DuplicateEdgeTriple(f"edge ({src}, {sym}, {dst}) given twice")
        edges.add(triple)
    return Presentation(alphabet, vertices, frozenset(edges), init)


def _induced(p: Presentation, keep: Sequence[int]) -> Presentation:
    """Induced subgraph on ``keep`` (kept in original order)."""
    if p.initial is None or p.initial not in keep:
        return Presentation.empty(p.alphabet)
    keep = sorted(keep)
    if len(keep) == len(p.vertices):
        return p
    remap = {old: new for new, old in enumerate(keep)}
    edges = frozenset(
        (remap[s], a, remap[t]) for s, a, t in p.edges if s in remap and t in remap
    )
    return Presentation(
        p.alphabet, tuple(p.vertices[i] for i in keep), edges, remap[p.initial]
    )


def prune(p: Presentation) -> Presentation:
    """Iteratively delete vertices without out-edges."""
    if p.is_empty:
        return p
    alive = set(range(len(p.vertices)))
    outdeg = [0] * len(p.vertices)
    preds = [[] for _ in p.vertices]
    for s, _, t in p.edges:
        outdeg[s] += 1
        preds[t].append(s)
    stack = [v for v in alive if outdeg[v] == 0]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in preds[v]:
            if u in alive:
                outdeg[u] -= 1
                if outdeg[u] == 0:
                    stack.append(u)
    return _induced(p, alive)


def _reachable_from(succ, start: int) -> list[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for _, t in succ[u]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return sorted(seen)


def restrict_reachable(p: Presentation) -> Presentation:
    if p.is_empty:
        return p
    return _induced(p, _reachable_from(p.successors, p.initial))


def is_right_resolving(p: Presentation) -> bool:
    return all(
        len({a for a, _ in out}) == len(out) for out in p.successors
    )


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _subset_construction(n_symbols: int, rel: Sequence[Sequence[int]], start: int):
    """Subset construction over bitmask relations.

    ``rel[a][u]`` is the bitmask of ``a``-successors of vertex ``u``.  Returns
    ``(subsets, table)`` in breadth-first discovery order, symbols explored
    in alphabet order; ``table[i]`` maps symbol to state index.
    """
    index = {start: 0}
    subsets = [start]
    table = []
    i = 0
    while i < len(subsets):
        members = _bits(subsets[i])
        row = {}
        for a in range(n_symbols):
            ra = rel[a]
            target = 0
            for u in members:
                target |= ra[u]
            if target:
                j = index.get(target)
                if j is None:
                    j = index[target] = len(subsets)
                    subsets.append(target)
                row[a] = j
        table.append(row)
        i += 1
    return subsets, table


def _relations(p: Presentation) -> list[list[int]]:
    rel = [[0] * len(p.vertices) for _ in p.alphabet]
    for s, a, t in p.edges:
        rel[a][s] |= 1 << t
    return rel


def determinize(p: Presentation) -> Presentation:
    """Subset construction from the initial vertex.

    Right-resolving input is returned unchanged.  Otherwise states are the
    nonempty vertex subsets met breadth-first, named ``{a,b}`` with members in
    index order.
    """
    if p.is_empty or is_right_resolving(p):
        return p
    subsets, table = _subset_construction(len(p.alphabet), _relations(p), 1 << p.initial)
    names = tuple(
        "{" + ",".join(p.vertices[i] for i in _bits(s)) + "}" for s in subsets
    )
    edges = frozenset((i, a, j) for i, row in enumerate(table) for a, j in row.items())
    return Presentation(p.alphabet, names, edges, 0)


# -- deterministic tables ----------------------------------------------------
#
# Internally a deterministic presentation is a list of dicts, symbol -> target.


def _prune_table(table: list[dict[int, int]], initial: int):
    """Return (table, initial) restricted to live states reachable from initial,
    or ``None`` if the initial state dies."""
    n = len(table)
    preds = [[] for _ in range(n)]
    outdeg = [len(row) for row in table]
    for s, row in enumerate(table):
        for t in row.values():
            preds[t].append(s)
    dead = [False] * n
    stack = [s for s in range(n) if outdeg[s] == 0]
    while stack:
        v = stack.pop()
        if dead[v]:
            continue
        dead[v] = True
        for u in preds[v]:
            if not dead[u]:
                outdeg[u] -= 1
                if outdeg[u] == 0:
                    stack.append(u)
    if dead[initial]:
        return None
    seen = {initial: 0}
    order = [initial]
    i = 0
    while i < len(order):
        for a in sorted(table[order[i]]):
            t = table[order[i]][a]
            if not dead[t] and t not in seen:
                seen[t] = len(order)
                order.append(t)
        i += 1
    new = [
        {a: seen[t] for a, t in table[s].items() if not dead[t]} for s in order
    ]
    return new, 0


def _refine(table: list[dict[int, int]]) -> list[int]:
    """Coarsest partition in which equivalent states enable the same symbols
    and move to equivalent states.  Returns the class of each state."""
    n = len(table)
    keys = {}
    cls = [keys.setdefault(tuple(sorted(row)), len(keys)) for row in table]
    count = len(keys)
    while True:
        keys = {}
        new = []
        for s in range(n):
            sig = (cls[s], tuple((a, cls[t]) for a, t in sorted(table[s].items())))
            new.append(keys.setdefault(sig, len(keys)))
        if len(keys) == count:
            return new
        cls, count = new, len(keys)


def _canonical(table: list[dict[int, int]], initial: int, order: Sequence[int]):
    """Breadth-first renumbering from ``initial``; ``order`` lists symbol
    indices in exploration order."""
    number = {initial: 0}
    queue = [initial]
    i = 0
    while i < len(queue):
        row = table[queue[i]]
        for a in order:
            t = row.get(a)
            if t is not None and t not in number:
                number[t] = len(queue)
                queue.append(t)
        i += 1
    return [{a: number[t] for a, t in table[s].items()} for s in queue]


def _minimize_table(alphabet: Alphabet, table: list[dict[int, int]], initial: int) -> "PathSet":
    pruned = _prune_table(table, initial)
    if pruned is None:
        return PathSet.empty(alphabet)
    table, initial = pruned
    cls = _refine(table)
    quotient = [None] * (max(cls) + 1)
    for s, c in enumerate(cls):
        if quotient[c] is None:
            quotient[c] = {a: cls[t] for a, t in table[s].items()}
    canon = _canonical(quotient, cls[initial], range(len(alphabet)))
    return PathSet._from_table(alphabet, canon)


def _minimize_relations(alphabet: Alphabet, rel, start_mask: int) -> "PathSet":
    """Minimize the language read from the vertex subset ``start_mask`` of a
    (possibly nondeterministic) graph given by bitmask relations.

    The graph is assumed pruned; callers that cannot guarantee it get a
    correct result anyway since the subset table is pruned afterwards.
    """
    if not start_mask:
        return PathSet.empty(alphabet)
    _, table = _subset_construction(len(alphabet), rel, start_mask)
    return _minimize_table(alphabet, table, 0)


@dataclass(frozen=True, eq=False)
class PathSet:
    """Canonical minimal right-resolving presentation of a path set.

    Vertex 0 is the initial vertex.  Equality (and hashing) compare the
    languages: the canonical forms are matched by symbol name, so two path
    sets over differently ordered alphabets compare equal when they denote
    the same set of words.
    """

    alphabet: Alphabet
    transitions: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def _from_table(cls, alphabet: Alphabet, table: list[dict[int, int]]) -> "PathSet":
        trans = tuple(tuple(sorted(row.items())) for row in table)
        return cls(alphabet, trans)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "PathSet":
        return cls(alphabet, ())

    @cached_property
    def rows(self) -> list[dict[int, int]]:
        return [dict(r) for r in self.transitions]

    @property
    def is_empty(self) -> bool:
        return not self.transitions

    @property
    def n_vertices(self) -> int:
        return len(self.transitions)

    def __len__(self) -> int:
        return len(self.transitions)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return [(s, a, t) for s, row in enumerate(self.transitions) for a, t in row]

    @cached_property
    def presentation(self) -> Presentation:
        if self.is_empty:
            return Presentation.empty(self.alphabet)
        names = tuple(f"v{i}" for i in range(len(self.transitions)))
        return Presentation(self.alphabet, names, frozenset(self.edges), 0)

    def step(self, vertex: int, symbol: int) -> int | None:
        return self.rows[vertex].get(symbol)

    def relations(self) -> list[list[int]]:
        """Bitmask successor relation per symbol."""
        rel = [[0] * len(self) for _ in self.alphabet]
        for s, row in enumerate(self.transitions):
            for a, t in row:
                rel[a][s] |= 1 << t
        return rel

    def over(self, alphabet: Alphabet) -> "PathSet":
        """The same language re-expressed over a larger alphabet."""
        if alphabet == self.alphabet:
            return self
        remap = [alphabet.index(s) for s in self.alphabet]
        table = [{remap[a]: t for a, t in row} for row in self.transitions]
        if not table:
            return PathSet.empty(alphabet)
        return PathSet._from_table(alphabet, _canonical(table, 0, range(len(alphabet))))

    @cached_property
    def key(self) -> tuple:
        """Alphabet-order independent canonical form, used for ``==``."""
        if self.is_empty:
            return (0, ())
        names = self.alphabet.symbols
        order = sorted({a for row in self.transitions for a, _ in row}, key=lambda a: names[a])
        canon = _canonical(self.rows, 0, order)
        edges = tuple(
            sorted((s, names[a], t) for s, row in enumerate(canon) for a, t in row.items())
        )
        return (len(canon), edges)

    def __eq__(self, other):
        if not isinstance(other, PathSet):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.is_empty:
            return "PathSet(empty)"
        edges = " ".join(f"{s}-{self.alphabet[a]}->{t}" for s, a, t in self.edges)
        return f"PathSet({len(self)} vertices: {edges})"


def minimize(p: Presentation) -> PathSet:
    """Prune, restrict to the reachable part, determinize, merge bisimilar
    vertices and renumber breadth-first."""
    p = restrict_reachable(prune(p))
    if p.is_empty:
        return PathSet.empty(p.alphabet)
    p = determinize(p)
    table = [dict(out) for out in p.successors]
    return _minimize_table(p.alphabet, table, p.initial)


def as_pathset(p) -> PathSet:
    return p if isinstance(p, PathSet) else minimize(p)


def equals(a: PathSet, b: PathSet) -> bool:
    return as_pathset(a) == as_pathset(b)


def _word(p_alphabet: Alphabet, w) -> list[int] | None:
    out = []
    for s in w:
        if s not in p_alphabet:
            return None
        out.append(p_alphabet.index(s))
    return out


def initial_blocks(p, depth: int) -> frozenset[tuple[str, ...]]:
    """All initial words of length at most ``depth`` of the path set.

    Only paths that continue forever count, so the graph is pruned first.
    The empty path set has no initial words at all, not even the empty one.
    """
    if isinstance(p, PathSet):
        p = p.presentation
    p = prune(p)
    if p.is_empty:
        return frozenset()
    rel = _relations(p)
    names = p.alphabet.symbols
    frontier = {(): 1 << p.initial}
    blocks = {()}
    # memo: vertex subset -> list of (symbol, successor subset)
    moves: dict[int, list[tuple[int, int]]] = {}
    for _ in range(depth):
        nxt = {}
        for w, mask in frontier.items():
            mv = moves.get(mask)
            if mv is None:
                mv = []
                members = _bits(mask)
                for a, ra in enumerate(rel):
                    t = 0
                    for u in members:
                        t |= ra[u]
                    if t:
                        mv.append((a, t))
                moves[mask] = mv
            for a, t in mv:
                nxt[w + (names[a],)] = t
        blocks.update(nxt)
        frontier = nxt
    return frozenset(blocks)


def intersection(a: PathSet, b: PathSet) -> PathSet:
    a, b = as_pathset(a), as_pathset(b)
    alphabet = a.alphabet.union(b.alphabet)
    if a.is_empty or b.is_empty:
        return PathSet.empty(alphabet)
    a, b = a.over(alphabet), b.over(alphabet)
    index = {(0, 0): 0}
    pairs = [(0, 0)]
    table = []
    i = 0
    while i < len(pairs):
        u, v = pairs[i]
        ru, rv = a.rows[u], b.rows[v]
        row = {}
        for sym, tu in ru.items():
            tv = rv.get(sym)
            if tv is not None:
                j = index.setdefault((tu, tv), len(pairs))
                if j == len(pairs):
                    pairs.append((tu, tv))
                row[sym] = j
        table.append(row)
        i += 1
    return _minimize_table(alphabet, table, 0)


def union(a: PathSet, b: PathSet) -> PathSet:
    a, b = as_pathset(a), as_pathset(b)
    alphabet = a.alphabet.union(b.alphabet)
    if a.is_empty:
        return b.over(alphabet)
    if b.is_empty:
        return a.over(alphabet)
    a, b = a.over(alphabet), b.over(alphabet)
    m = len(a)
    rel = [[0] * (m + len(b) + 1) for _ in alphabet]
    fresh = m + len(b)
    for s, sym, t in a.edges:
        rel[sym][s] |= 1 << t
        if s == 0:
            rel[sym][fresh] |= 1 << t
    for s, sym, t in b.edges:
        rel[sym][m + s] |= 1 << (m + t)
        if s == 0:
            rel[sym][fresh] |= 1 << (m + t)
    return _minimize_relations(alphabet, rel, 1 << fresh)


def word_path_set(p: PathSet, w: Sequence[str]) -> PathSet:
    """Infinite words ``x`` with ``w + x`` in ``p``."""
    p = as_pathset(p)
    if p.is_empty:
        return p
    word = _word(p.alphabet, w)
    if word is None:
        return PathSet.empty(p.alphabet)
    v = 0
    for a in word:
        v = p.rows[v].get(a)
        if v is None:
            return PathSet.empty(p.alphabet)
    return _minimize_table(p.alphabet, [dict(r) for r in p.rows], v)
