"""Word-level reference semantics on depth-bounded block sets.

Everything here works on finite words (tuples of symbol names) and never
looks at graph structure beyond enumerating initial words, so it serves as
an independent check of the graph constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    PathSet,
    Presentation,
    determinize,
    initial_blocks,
    prune,
    restrict_reachable,
)

__all__ = [
    "BlockSet",
    "DepthMismatch",
    "InvalidBlockSet",
    "blocks_of",
    "blocks_decimate",
    "blocks_interleave",
    "equals_blockwise",
    "prefix_closure",
]

Word = tuple[str, ...]


class DepthMismatch(ValueError):
    pass


class InvalidBlockSet(ValueError):
    pass


def prefix_closure(words: Iterable[Word]) -> set[Word]:
    out = set()
    for w in words:
        for i in range(len(w) + 1):
            out.add(w[:i])
    return out


@dataclass(frozen=True)
class BlockSet:
    """Initial words of a path set up to ``depth``, sorted by length then value.

    Must be prefix-closed, and every word shorter than ``depth`` must extend
    inside the set.  The empty set stands for the empty path set.
    """

    depth: int
    blocks: tuple[Word, ...]

    def __post_init__(self):
        blocks = tuple(sorted(set(map(tuple, self.blocks)), key=lambda w: (len(w), w)))
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            return
        present = set(blocks)
        extended = {w[:-1] for w in blocks if w}
        for w in blocks:
            if len(w) > self.depth:
                raise InvalidBlockSet(f"block {w} longer than depth {self.depth}")
            if w and w[:-1] not in present:
                raise InvalidBlockSet(f"block {w} has a missing prefix")
            if len(w) < self.depth and w not in extended:
                raise InvalidBlockSet(f"block {w} cannot be extended")
        if () not in present:
            raise InvalidBlockSet("nonempty block set lacks the empty word")

    @property
    def full(self) -> list[Word]:
        """Blocks of maximal length."""
        return [w for w in self.blocks if len(w) == self.depth]

    def __len__(self):
        return len(self.blocks)

    def __contains__(self, w):
        return tuple(w) in self.as_set()

    def as_set(self) -> frozenset[Word]:
        return frozenset(self.blocks)


def blocks_of(p, depth: int) -> BlockSet:
    return BlockSet(depth, tuple(initial_blocks(p, depth)))


def blocks_decimate(b: BlockSet, j: int, n: int) -> BlockSet:
    """Letters at positions ``j, j+n, ...`` of every full-length block.

    The result has one letter per such position below ``b.depth``.
    """
    if n < 1 or j < 0:
        raise ValueError("need j >= 0 and n >= 1")
    depth = -(-(b.depth - j) // n) if b.depth > j else 0
    if not b.blocks:
        return BlockSet(depth, ())
    words = {w[j::n][:depth] for w in b.full}
    return BlockSet(depth, tuple(prefix_closure(words)))


def blocks_interleave(components: Sequence[BlockSet]) -> BlockSet:
    """Words of length up to ``n * L`` whose ``j``-th decimation is a block of
    component ``j``."""
    if not components:
        raise ValueError("need at least one component")
    n = len(components)
    depth = components[0].depth
    if any(c.depth != depth for c in components):
        raise DepthMismatch(f"component depths differ: {[c.depth for c in components]}")
    if any(not c.blocks for c in components):
        return BlockSet(n * depth, ())
    sets = [c.as_set() for c in components]
    # letters allowed after each component prefix
    nexts = []
    for s in sets:
        table: dict[Word, list[str]] = {}
        for w in s:
            if w:
                table.setdefault(w[:-1], []).append(w[-1])
        nexts.append(table)
    # state: the n component prefixes read so far; the output word is implicit
    level = {(): ((),) * n}
    out = [()]
    for t in range(n * depth):
        i = t % n
        nxt = {}
        for word, parts in level.items():
            for a in nexts[i].get(parts[i], ()):
                nxt[word + (a,)] = parts[:i] + (parts[i] + (a,),) + parts[i + 1:]
        out.extend(nxt)
        level = nxt
    return BlockSet(n * depth, tuple(out))


def _right_resolving(p) -> Presentation:
    if isinstance(p, PathSet):
        return p.presentation
    return determinize(restrict_reachable(prune(p)))


def equals_blockwise(p1, p2) -> bool:
    """Compare initial blocks up to the sum of the two vertex counts, which
    decides equality for right-resolving presentations."""
    g1, g2 = _right_resolving(p1), _right_resolving(p2)
    depth = len(g1.vertices) + len(g2.vertices)
    return initial_blocks(g1, depth) == initial_blocks(g2, depth)
