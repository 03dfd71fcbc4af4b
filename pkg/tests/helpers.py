"""Shared path sets and random pools for the test modules."""

from functools import lru_cache
from itertools import product

from pathsets import fixtures as fx
from pathsets import initial_blocks, minimize, word_path_set
from pathsets.core import Presentation

F2 = minimize(fx.FULL_SHIFT)
GM = minimize(fx.GOLDEN_MEAN)
C2 = minimize(fx.TWO_CYCLE)
Q0 = minimize(fx.Q0)
Q1 = minimize(fx.Q1)
ZEROS = minimize(fx.ZEROS)
ONES = minimize(fx.ONES)
TWOS = minimize(fx.TWOS)
ALT10 = minimize(fx.ALTERNATING_10)
LEVELED = minimize(fx.LEVELED_RHO)


def loop_word(symbols, alphabet=("0", "1")):
    """Path set holding the single periodic word ``symbols^inf``."""
    k = len(symbols)
    names = [f"w{i}" for i in range(k)]
    edges = [(names[i], symbols[i], names[(i + 1) % k]) for i in range(k)]
    return minimize(Presentation.build(alphabet, names, edges, names[0]))


def all_words(alphabet, length):
    return set(product(alphabet, repeat=length))


def count_blocks(p, depth):
    """Number of initial blocks of length <= depth of a canonical path set."""
    if p.is_empty:
        return 0
    counts = {0: 1}
    total = 1
    for _ in range(depth):
        nxt = {}
        for v, c in counts.items():
            for t in p.rows[v].values():
                nxt[t] = nxt.get(t, 0) + c
        counts = nxt
        total += sum(nxt.values())
    return total


def residual_count(p):
    """Distinct residual languages, measured on blocks of length ``m``."""
    m = len(p)
    seen = set()
    frontier = [()]
    words = [()]
    for _ in range(m - 1):
        frontier = [
            w + (a,) for w in frontier for a in p.alphabet
            if not word_path_set(p, w + (a,)).is_empty
        ]
        words += frontier
    for w in words:
        seen.add(initial_blocks(word_path_set(p, w), m))
    return len(seen)


@lru_cache(maxsize=None)
def pool(seed, count, max_vertices=5, max_symbols=3, max_minimal=None):
    from pathsets.sampling import random_pathsets
    return tuple(random_pathsets(seed, count, max_vertices, max_symbols, max_minimal))


@lru_cache(maxsize=None)
def raw_pool(seed, count, max_vertices=5, max_symbols=3):
    import random
    from pathsets.sampling import random_presentation
    rng = random.Random(seed)
    return tuple(
        random_presentation(rng, max_vertices, max_symbols, deterministic=rng.random() < 0.3)
        for _ in range(count)
    )



# one "PASS/FAIL" line per acceptance criterion, printed by conftest
ACCEPTANCE = []


def record(number, title, check):
    """Run ``check`` and log a pass/fail line; failures propagate."""
    try:
        detail = check()
    except Exception as exc:
        line = f"FAIL  AC{number:02d}  {title}: {type(exc).__name__}: {exc}"
        ACCEPTANCE.append(line)
        print(line)
        raise
    line = f"PASS  AC{number:02d}  {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE.append(line)
    print(line)
