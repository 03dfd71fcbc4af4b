"""n-fold interleaving of path sets, interleaving closure and factors."""

from __future__ import annotations

import itertools
from collections import deque
from typing import Sequence

from .core import PathSet, Presentation, as_pathset, minimize, unify_alphabets
from .decimation import decimate

__all__ = [
    "NotFactorizable",
    "interleave_product",
    "interleave",
    "interleaving_closure",
    "is_n_factorizable",
    "interleaving_factors",
]


class NotFactorizable(ValueError):
    def __init__(self, n: int):
        super().__init__(f"path set has no {n}-fold interleaving factorization")
        self.n = n


def _as_presentation(c) -> Presentation:
    return c.presentation if isinstance(c, PathSet) else c


def interleave_product(components: Sequence, reachable: bool = True) -> Presentation:
    """Pointed graph product whose words interleave the components' words.

    A state is ``(phase, tuple)``: at phase ``i`` the tuple starts with the
    current vertex of component ``i``, followed by the other components in
    cyclic order.  A step moves component ``i`` along one of its edges and
    rotates its new vertex to the back.  The part reachable from
    ``(0, initial vertices)`` is returned, numbered breadth-first; with
    ``reachable=False`` every one of the ``n * prod(k_i)`` states is kept,
    unreachable ones appended in lexicographic order.
    """
    comps = [_as_presentation(c) for c in components]
    n = len(comps)
    if n == 0:
        raise ValueError("need at least one component")
    alphabet = unify_alphabets(c.alphabet for c in comps)
    if any(c.is_empty for c in comps):
        return Presentation.empty(alphabet)
    succ = []
    for c in comps:
        remap = [alphabet.index(s) for s in c.alphabet]
        rows = [[] for _ in c.vertices]
        for s, a, t in c.edges:
            rows[s].append((remap[a], t))
        succ.append([sorted(r) for r in rows])

    start = (0, tuple(c.initial for c in comps))
    index = {start: 0}
    states = [start]
    edges = set()
    queue = deque([start])
    while queue:
        state = queue.popleft()
        phase, verts = state
        for a, t in succ[phase][verts[0]]:
            nxt = ((phase + 1) % n, verts[1:] + (t,))
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            edges.add((index[state], a, j))

    if not reachable:
        for phase in range(n):
            sizes = [len(comps[(phase + k) % n].vertices) for k in range(n)]
            for verts in itertools.product(*map(range, sizes)):
                state = (phase, verts)
                if state not in index:
                    index[state] = len(states)
                    states.append(state)
                    for a, t in succ[phase][verts[0]]:
                        queue.append((index[state], a, ((phase + 1) % n, verts[1:] + (t,))))
        for s, a, nxt in queue:
            edges.add((s, a, index[nxt]))

    def parts(state):
        phase, verts = state
        return [comps[(phase + k) % n].vertices[v] for k, v in enumerate(verts)]

    names = ["".join(parts(s)) for s in states]
    if len(set(names)) != len(names):
        names = [f"{s[0]}:" + ".".join(parts(s)) for s in states]
    return Presentation(alphabet, tuple(names), frozenset(edges), 0)


def interleave(components: Sequence) -> PathSet:
    return minimize(interleave_product(components))


def interleaving_closure(p: PathSet, n: int) -> PathSet:
    """Interleaving of the ``n`` principal ``n``-decimations of ``p``."""
    if n < 1:
        raise ValueError("n must be positive")
    p = as_pathset(p)
    if n == 1 or p.is_empty:
        return p
    return interleave([decimate(p, (j, n)) for j in range(n)])


def _closure_within(p: PathSet, n: int) -> bool:
    """True iff the ``n``-fold closure of ``p`` is contained in ``p``.

    Walks the product of the decimations in lockstep with ``p`` and stops at
    the first symbol the product allows but ``p`` does not.  The product of
    pruned components is pruned, so such a symbol starts a word outside ``p``.
    """
    factors = [decimate(p, (j, n)) for j in range(n)]
    alphabet = unify_alphabets([p.alphabet] + [f.alphabet for f in factors])
    p = p.over(alphabet)
    rows = [f.over(alphabet).rows for f in factors]
    start = (0, (0,) * n, 0)
    seen = {start}
    queue = deque([start])
    while queue:
        phase, verts, s = queue.popleft()
        here = p.rows[s]
        for a, t in rows[phase][verts[0]].items():
            s2 = here.get(a)
            if s2 is None:
                return False
            nxt = ((phase + 1) % n, verts[1:] + (t,), s2)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def is_n_factorizable(p: PathSet, n: int) -> bool:
    """Whether ``p`` equals its ``n``-fold interleaving closure.

    Since a set is always contained in its closure, only the reverse
    containment is checked.
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = as_pathset(p)
    if n == 1 or p.is_empty:
        return True
    return _closure_within(p, n)


def interleaving_factors(p: PathSet, n: int) -> list[PathSet]:
    """The unique factors ``[psi_{0,n}(p), ..., psi_{n-1,n}(p)]``."""
    p = as_pathset(p)
    if not is_n_factorizable(p, n):
        raise NotFactorizable(n)
    return [decimate(p, (j, n)) for j in range(n)]
