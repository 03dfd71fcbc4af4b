"""Seeded random presentations for property checks and demos."""

from __future__ import annotations

import random

from .core import Alphabet, PathSet, Presentation, minimize
from .interleaving import interleave

__all__ = ["random_presentation", "random_leveled", "random_pathsets"]

SYMBOLS = ("0", "1", "2")


def _alphabet_size(rng, max_symbols):
    if max_symbols == 1 or rng.random() < 0.1:
        return 1
    return rng.randint(2, max_symbols)


def random_presentation(
    rng: random.Random,
    max_vertices: int = 5,
    max_symbols: int = 3,
    deterministic: bool = False,
) -> Presentation:
    """A random pointed graph; may be nondeterministic, unpruned or empty."""
    m = rng.randint(1, max_vertices)
    k = _alphabet_size(rng, max_symbols)
    alphabet = Alphabet(SYMBOLS[:k])
    edges = set()
    for s in range(m):
        # out-degree at least one keeps most samples free of dead ends
        syms = [a for a in range(k) if rng.random() < 0.6] or [rng.randrange(k)]
        for a in syms:
            if deterministic:
                edges.add((s, a, rng.randrange(m)))
            else:
                targets = [t for t in range(m) if rng.random() < 1.2 / m]
                edges.update((s, a, t) for t in targets or [rng.randrange(m)])
    if rng.random() < 0.2:
        edges.discard(rng.choice(sorted(edges)))
    names = tuple(f"u{i}" for i in range(m))
    return Presentation(alphabet, names, frozenset(edges), rng.randrange(m))


def random_leveled(rng: random.Random, max_vertices: int = 5, max_symbols: int = 3) -> Presentation:
    """A random rho-shaped leveled presentation."""
    m = rng.randint(1, max_vertices)
    k = _alphabet_size(rng, max_symbols)
    alphabet = Alphabet(SYMBOLS[:k])
    back = rng.randrange(m)
    edges = set()
    for s in range(m):
        t = s + 1 if s + 1 < m else back
        syms = [a for a in range(k) if rng.random() < 0.5] or [rng.randrange(k)]
        edges.update((s, a, t) for a in syms)
    return Presentation(alphabet, tuple(f"l{i}" for i in range(m)), frozenset(edges), 0)


def random_pathsets(
    seed: int,
    count: int,
    max_vertices: int = 5,
    max_symbols: int = 3,
    max_minimal: int | None = None,
    leveled_share: float = 0.15,
    interleaved_share: float = 0.15,
) -> list[PathSet]:
    """``count`` nonempty minimized random path sets.

    ``max_minimal`` bounds the size of the minimal presentation.  Part of the
    samples are drawn leveled, and part are interleavings of two or three
    small random sets, so that both factorization regimes show up.  Most
    one-vertex results are redrawn since they are all leveled.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.random()
        if r < leveled_share:
            p = minimize(random_leveled(rng, max_vertices, max_symbols))
        elif r < leveled_share + interleaved_share:
            parts = [
                minimize(random_presentation(rng, 3, max_symbols, rng.random() < 0.5))
                for _ in range(rng.choice((2, 2, 3)))
            ]
            p = interleave(parts)
        else:
            pres = random_presentation(rng, max_vertices, max_symbols, rng.random() < 0.5)
            p = minimize(pres)
        if p.is_empty or (max_minimal is not None and len(p) > max_minimal):
            continue
        if len(p) == 1 and rng.random() < 0.7:
            continue
        out.append(p)
    return out
