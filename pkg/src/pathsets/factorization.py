"""Structure of interleaving factorizations of path sets.

A path set is either infinitely factorizable, which happens exactly when
its minimal presentation is leveled (a product of per-position alphabets),
or its factorizable levels are the divisors of a single exponent ``f``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import EmptyPathSet, PathSet, Presentation, _bits, as_pathset, minimize
from .decimation import LeveledProfile, decimate, level_set, position_alphabets
from .interleaving import interleave, interleaving_factors, is_n_factorizable

__all__ = [
    "LeveledProfile",
    "FactorizationTree",
    "MissingConfiguration",
    "INFINITE",
    "is_leveled",
    "leveled_profile",
    "leveled_envelope",
    "profile_path_set",
    "factorization_exponent",
    "factor_set",
    "complete_factorization",
    "tree_reassembles",
    "self_loop_criterion",
    "missing_configuration",
]

INFINITE = math.inf

LEVELED = "leveled"
INDECOMPOSABLE = "indecomposable"
FACTORED = "factored"


def _nonempty(p) -> PathSet:
    p = as_pathset(p)
    if p.is_empty:
        raise EmptyPathSet("operation undefined on the empty path set")
    return p


def is_leveled(p: PathSet) -> bool:
    """All out-edges of each vertex of the minimal presentation share a target."""
    p = _nonempty(p)
    return all(len({t for _, t in row}) == 1 for row in p.transitions)


def leveled_profile(p: PathSet) -> Optional[LeveledProfile]:
    """The per-position alphabets of a leveled path set, else ``None``."""
    if not is_leveled(p):
        return None
    return position_alphabets(p)


def profile_path_set(profile: LeveledProfile, alphabet) -> PathSet:
    """Minimal path set of all words with ``k``-th letter in ``profile.at(k)``."""
    sets = list(profile.preperiod) + list(profile.period)
    s = len(profile.preperiod)
    names = tuple(f"l{k}" for k in range(len(sets)))
    edges = set()
    for k, syms in enumerate(sets):
        nxt = k + 1 if k + 1 < len(sets) else s
        for a in syms:
            edges.add((k, alphabet.index(a), nxt))
    return minimize(Presentation(alphabet, names, frozenset(edges), 0))


def leveled_envelope(p: PathSet) -> PathSet:
    """Smallest leveled path set containing ``p``."""
    p = _nonempty(p)
    return profile_path_set(position_alphabets(p), p.alphabet)


def factorization_exponent(p: PathSet):
    """``INFINITE`` for leveled sets, otherwise the largest factorizable level.

    A non-leveled set with ``m`` minimal vertices only factors at levels
    ``n <= m - 1``, and its factorizable levels are closed under lcm, so the
    maximum over that range is the exponent.
    """
    p = _nonempty(p)
    if is_leveled(p):
        return INFINITE
    levels = [n for n in range(1, len(p)) if is_n_factorizable(p, n)]
    f = max(levels)
    bad = [n for n in levels if f % n]
    if bad:
        raise AssertionError(f"factorizable levels {bad} do not divide {f}")
    return f


def factor_set(p: PathSet) -> list[PathSet]:
    """All path sets occurring as a factor of some interleaving factorization.

    Listed in order of first appearance by ``(n, j)``.
    """
    p = _nonempty(p)
    m = len(p)
    found: dict[PathSet, None] = {}
    if is_leveled(p):
        for n in range(1, 2 * m):
            for j in range(n):
                found.setdefault(decimate(p, (j, n)))
        if len(found) > m * m:
            raise AssertionError(f"{len(found)} factors exceed the bound {m * m}")
    else:
        f = factorization_exponent(p)
        for n in range(1, f + 1):
            if f % n == 0:
                for q in interleaving_factors(p, n):
                    found.setdefault(q)
    return list(found)


@dataclass(frozen=True)
class FactorizationTree:
    """Node of an iterated interleaving factorization.

    ``status`` is ``"leveled"`` (frozen leaf carrying ``profile``),
    ``"indecomposable"`` (leaf) or ``"factored"`` (``n`` children whose
    interleaving is ``value``).
    """

    value: PathSet
    status: str
    n: int = 1
    children: tuple["FactorizationTree", ...] = ()
    profile: Optional[LeveledProfile] = None

    @property
    def is_leaf(self) -> bool:
        return self.status != FACTORED

    def depth(self) -> int:
        return 0 if self.is_leaf else 1 + max(c.depth() for c in self.children)

    def leaves(self) -> list["FactorizationTree"]:
        if self.is_leaf:
            return [self]
        return [leaf for c in self.children for leaf in c.leaves()]

    def shape(self):
        """Statuses only, e.g. ``("factored", 2, ["indecomposable", "leveled"])``."""
        if self.is_leaf:
            return self.status
        return (FACTORED, self.n, [c.shape() for c in self.children])

    def lines(self, indent: str = "  ") -> list[str]:
        def walk(node, depth, label):
            head = f"{indent * depth}{label}{node.status}"
            if node.status == FACTORED:
                head += f" n={node.n}"
            elif node.status == LEVELED:
                head += f" {node.profile}"
            head += f" [{len(node.value)} vertices]"
            out = [head]
            for j, c in enumerate(node.children):
                out.extend(walk(c, depth + 1, f"psi({j},{node.n}): "))
            return out

        return walk(self, 0, "")


def complete_factorization(p: PathSet) -> FactorizationTree:
    """Factor repeatedly at the smallest level ``n >= 2`` until every leaf is
    leveled (frozen) or admits no factorization."""
    p = _nonempty(p)
    if is_leveled(p):
        return FactorizationTree(p, LEVELED, profile=position_alphabets(p))
    for n in range(2, len(p)):
        if is_n_factorizable(p, n):
            kids = tuple(complete_factorization(q) for q in interleaving_factors(p, n))
            return FactorizationTree(p, FACTORED, n, kids)
    return FactorizationTree(p, INDECOMPOSABLE)


def tree_reassembles(tree: FactorizationTree) -> bool:
    """Check that every factored node is the interleaving of its children."""
    if tree.is_leaf:
        return True
    if interleave([c.value for c in tree.children]) != tree.value:
        return False
    return all(tree_reassembles(c) for c in tree.children)


def self_loop_criterion(p: PathSet) -> bool:
    """Whether the minimal presentation has a self-loop at the initial vertex."""
    p = _nonempty(p)
    return any(t == 0 for _, t in p.transitions[0])


@dataclass(frozen=True)
class MissingConfiguration:
    """A block ``b`` with ``b[i]`` in ``A_{k+i}`` that no word of the path set
    carries at position ``k``; ``len(block) == ell + 1``."""

    k: int
    ell: int
    block: tuple[str, ...]


def _first_dead_block(p: PathSet, profile: LeveledProfile, k: int, ell: int):
    """Lexicographically least block of length ``ell + 1`` drawn from the
    position alphabets that is not readable from the level-``k`` vertices."""
    index = p.alphabet.index
    rel = p.relations()

    def fill(prefix):
        return prefix + tuple(profile.at(k + i)[0] for i in range(len(prefix), ell + 1))

    def search(prefix, mask):
        i = len(prefix)
        if i == ell + 1:
            return None
        for a in profile.at(k + i):
            ra = rel[index(a)]
            nxt = 0
            for v in _bits(mask):
                nxt |= ra[v]
            if not nxt:
                return fill(prefix + (a,))
            hit = search(prefix + (a,), nxt)
            if hit is not None:
                return hit
        return None

    return search((), level_set(p, k))


def missing_configuration(p: PathSet) -> Optional[MissingConfiguration]:
    """Least missing configuration ordered by ``(k + ell, k, block)``, or
    ``None`` when ``p`` is a product of its position alphabets."""
    p = _nonempty(p)
    if is_leveled(p):
        return None
    profile = position_alphabets(p)
    # a distinguishing initial block exists below this length
    bound = len(p) + len(profile_path_set(profile, p.alphabet))
    for total in range(1, bound + 1):
        for k in range(total):
            block = _first_dead_block(p, profile, k, total - k)
            if block is not None:
                return MissingConfiguration(k, total - k, block)
    raise AssertionError("non-leveled path set without a missing configuration")
