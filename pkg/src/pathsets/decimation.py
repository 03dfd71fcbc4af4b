"""Shifts and decimations of path sets.

``decimate(p, (j, n))`` keeps the letters at positions ``j, j+n, j+2n, ...``
of every word.  Principal decimations (``j < n``) are built on the vertex set
of ``p`` by relabeling length-``n`` paths with their ``j``-th letter; the
others go through the shift construction first, since
``psi_{j,n}(P) = psi_{0,n}(S^j P)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    EmptyPathSet,
    PathSet,
    Presentation,
    _bits,
    _minimize_relations,
    as_pathset,
    minimize,
    restrict_reachable,
)

__all__ = [
    "DecimationIndex",
    "LeveledProfile",
    "RelationPowerTable",
    "level_set",
    "shift_presentation",
    "shift",
    "higher_power_presentation",
    "decimate",
    "weak_shift_orbit",
    "position_alphabets",
    "kernel",
    "relation_powers",
    "certified_decimations",
    "full_decimation_set",
]


class DecimationIndex(NamedTuple):
    j: int
    n: int


def _check_index(j: int, n: int):
    if n < 1 or j < 0:
        raise ValueError(f"decimation index needs j >= 0 and n >= 1, got ({j}, {n})")


@dataclass(frozen=True)
class LeveledProfile:
    """Eventually periodic sequence of symbol sets ``A_0, A_1, ...``.

    Each set is a tuple of symbol names in alphabet order.  The profile
    denotes the product set of all words with ``k``-th letter in ``A_k``.
    """

    preperiod: tuple[tuple[str, ...], ...]
    period: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(map(tuple, self.preperiod)))
        object.__setattr__(self, "period", tuple(map(tuple, self.period)))
        if not self.period:
            raise ValueError("period must be nonempty")
        if not all(self.preperiod) or not all(self.period):
            raise ValueError("every position needs a nonempty symbol set")

    def at(self, k: int) -> tuple[str, ...]:
        s = len(self.preperiod)
        if k < s:
            return self.preperiod[k]
        return self.period[(k - s) % len(self.period)]

    def __str__(self):
        def fmt(sets):
            return "[" + ", ".join("{" + ",".join(a) + "}" for a in sets) + "]"

        return f"preperiod={fmt(self.preperiod)} period={fmt(self.period)}"


def _unlabeled(rel) -> list[int]:
    m = len(rel[0]) if rel else 0
    u = [0] * m
    for ra in rel:
        for v in range(m):
            u[v] |= ra[v]
    return u


def _image(rel_row: list[int], mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= rel_row[v]
    return out


def _levels(p: PathSet):
    """Yield the vertex sets reachable in exactly 0, 1, 2, ... steps."""
    u = _unlabeled(p.relations())
    mask = 1
    while True:
        yield mask
        mask = _image(u, mask)


def _level_cycle(p: PathSet):
    """The eventually periodic level-set sequence as (sequence, start of cycle)."""
    seen = {}
    seq = []
    for mask in _levels(p):
        if mask in seen:
            return seq, seen[mask]
        seen[mask] = len(seq)
        seq.append(mask)


def level_set(p: PathSet, j: int) -> int:
    """Bitmask of vertices reachable from the initial vertex in exactly ``j`` steps."""
    p = as_pathset(p)
    if p.is_empty:
        return 0
    seq, start = _level_cycle(p)
    if j < len(seq):
        return seq[j]
    return seq[start + (j - start) % (len(seq) - start)]


def shift_presentation(p: PathSet, j: int) -> Presentation:
    """Presentation of ``S^j p`` with one fresh marked vertex added.

    The fresh vertex ``w`` gets a copy of every out-edge of the vertices
    reachable in exactly ``j`` steps; it has no entering edges.
    """
    p = as_pathset(p)
    if p.is_empty:
        return p.presentation
    base = p.presentation
    m = len(base.vertices)
    layer = level_set(p, j)
    extra = {(m, a, t) for s, a, t in base.edges if layer >> s & 1}
    return Presentation(p.alphabet, base.vertices + ("w",), base.edges | extra, m)


def shift(p: PathSet, j: int = 1) -> PathSet:
    if j < 0:
        raise ValueError("shift amount must be nonnegative")
    p = as_pathset(p)
    if j == 0 or p.is_empty:
        return p
    return minimize(shift_presentation(p, j))


def higher_power_presentation(pres: Presentation, j: int, n: int) -> Presentation:
    """Relabeled ``n``-th higher power: an edge ``u -b-> w`` for every
    length-``n`` path from ``u`` to ``w`` whose letter at offset ``j`` is ``b``.
    Restricted to the part reachable from the marked vertex."""
    if not 0 <= j < n:
        raise ValueError("higher power relabeling needs 0 <= j < n")
    if pres.is_empty:
        return pres
    m = len(pres.vertices)
    rel = [[0] * m for _ in pres.alphabet]
    for s, a, t in pres.edges:
        rel[a][s] |= 1 << t
    u = _unlabeled(rel)
    edges = set()
    for v in range(m):
        before = 1 << v
        for _ in range(j):
            before = _image(u, before)
        if not before:
            continue
        for a, ra in enumerate(rel):
            after = _image(ra, before)
            for _ in range(n - 1 - j):
                after = _image(u, after)
            for t in _bits(after):
                edges.add((v, a, t))
    out = Presentation(pres.alphabet, pres.vertices, frozenset(edges), pres.initial)
    return restrict_reachable(out)


def decimate(p: PathSet, idx) -> PathSet:
    """``psi_{j,n}(p)``: letters at positions ``j, j+n, j+2n, ...``."""
    j, n = idx
    _check_index(j, n)
    p = as_pathset(p)
    if p.is_empty:
        return p
    if j < n:
        return minimize(higher_power_presentation(p.presentation, j, n))
    return minimize(higher_power_presentation(shift_presentation(p, j), 0, n))


def weak_shift_orbit(p: PathSet) -> tuple[int, int]:
    """Smallest ``(j, k)``, ``j < k``, with ``S^j p == S^k p``.

    The shifted sets are generated in order and the first repeated canonical
    form is reported; the sequence is eventually periodic, so this is also
    the lexicographically least such pair.
    """
    p = as_pathset(p)
    if p.is_empty:
        raise EmptyPathSet("weak_shift_orbit of the empty path set")
    seen = {}
    t = 0
    while True:
        q = p if t == 0 else minimize(shift_presentation(p, t))
        if q in seen:
            return seen[q], t
        seen[q] = t
        t += 1


def _labels_from(p: PathSet, mask: int) -> tuple[str, ...]:
    syms = set()
    for v in _bits(mask):
        syms.update(p.rows[v])
    return tuple(p.alphabet[a] for a in sorted(syms))


def position_alphabets(p: PathSet) -> LeveledProfile:
    """Symbols usable at each position, as an eventually periodic profile.

    The period comes from the first repeat of the exact-step reachable sets.
    """
    p = as_pathset(p)
    if p.is_empty:
        raise EmptyPathSet("position_alphabets of the empty path set")
    seq, start = _level_cycle(p)
    sets = [_labels_from(p, mask) for mask in seq]
    return LeveledProfile(tuple(sets[:start]), tuple(sets[start:]))


def kernel(p: PathSet, n: int) -> list[PathSet]:
    """The ``n``-kernel ``{psi_{j, n^k}(p)}``, in discovery order.

    Computed as the closure of ``{p}`` under ``S`` and ``psi_{0,n}``.
    """
    if n < 2:
        raise ValueError("kernel base must be at least 2")
    p = as_pathset(p)
    found = {p: None}
    queue = [p]
    i = 0
    while i < len(queue):
        q = queue[i]
        i += 1
        for r in (shift(q, 1), decimate(q, (0, n))):
            if r not in found:
                found[r] = None
                queue.append(r)
    return queue


@dataclass(frozen=True)
class RelationPowerTable:
    """Distinct powers ``U^0, U^1, ...`` of a relation on a finite set.

    Relations are tuples of row bitmasks.  ``powers[index + period]`` would
    repeat ``powers[index]``; every power ``U^t`` is one of the listed ones.
    """

    base: tuple[int, ...]
    powers: tuple[tuple[int, ...], ...]
    index: int
    period: int

    def power(self, t: int) -> tuple[int, ...]:
        if t < len(self.powers):
            return self.powers[t]
        return self.powers[self.index + (t - self.index) % self.period]

    def __len__(self):
        return len(self.powers)


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(_image(b, row) for row in a)


def relation_powers(base) -> RelationPowerTable:
    base = tuple(base)
    identity = tuple(1 << v for v in range(len(base)))
    seen = {identity: 0}
    powers = [identity]
    while True:
        nxt = _compose(powers[-1], base)
        if nxt in seen:
            i0 = seen[nxt]
            return RelationPowerTable(base, tuple(powers), i0, len(powers) - i0)
        seen[nxt] = len(powers)
        powers.append(nxt)


def certified_decimations(p: PathSet) -> list[tuple[PathSet, tuple[int, int]]]:
    """Every distinct ``psi_{j,n}(p)`` with the first ``(j, n)`` producing it.

    ``psi_{j,n}(p)`` depends on ``j`` only through the vertex set reachable in
    exactly ``j`` steps (row of ``U^j``) and on ``n`` only through ``U^(n-1)``,
    which is composed after each labeled edge relation.  Both range over the
    finitely many distinct powers of ``U``, so scanning
    ``j < len(table)``, ``n <= len(table)`` covers all decimations.
    """
    p = as_pathset(p)
    if p.is_empty:
        raise EmptyPathSet("full_decimation_set of the empty path set")
    rel = p.relations()
    table = relation_powers(_unlabeled(rel))
    found: dict[PathSet, tuple[int, int]] = {}
    for b in range(len(table)):
        after = table.powers[b]
        hp = [[_image(after, ra[v]) for v in range(len(p))] for ra in rel]
        for a in range(len(table)):
            q = _minimize_relations(p.alphabet, hp, table.powers[a][0])
            found.setdefault(q, (a, b + 1))
    return sorted(found.items(), key=lambda item: (item[1][1], item[1][0]))


def full_decimation_set(p: PathSet) -> list[PathSet]:
    return [q for q, _ in certified_decimations(p)]
