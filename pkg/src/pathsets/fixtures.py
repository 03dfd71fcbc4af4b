"""Small named presentations used in the docs, demos and tests."""

from .core import Presentation

__all__ = [
    "FULL_SHIFT",
    "FULL_SHIFT_A",
    "FULL_SHIFT_B",
    "FULL_SHIFT_PRODUCT",
    "GOLDEN_MEAN",
    "TWO_CYCLE",
    "BRANCHING",
    "Q0",
    "Q1",
    "Q0_Q1_PRODUCT",
    "Q0_Q1_MINIMAL",
    "LEVELED_RHO",
    "ZEROS",
    "ONES",
    "TWOS",
    "ALTERNATING_10",
    "with_sink",
    "with_isolated",
]

BINARY = ("0", "1")
DIGITS = ("0", "1", "2", "3")

# one vertex with both loops: every binary word
FULL_SHIFT = Presentation.build(BINARY, ["q0"], [("q0", "0", "q0"), ("q0", "1", "q0")], "q0")

# the same full shift drawn twice with different vertex names
FULL_SHIFT_A = Presentation.build(BINARY, ["v0"], [("v0", "0", "v0"), ("v0", "1", "v0")], "v0")
FULL_SHIFT_B = Presentation.build(BINARY, ["v1"], [("v1", "0", "v1"), ("v1", "1", "v1")], "v1")

# their two-fold interleaving product: a double cover of FULL_SHIFT
FULL_SHIFT_PRODUCT = Presentation.build(
    BINARY,
    ["v0v1", "v1v0"],
    [
        ("v0v1", "0", "v1v0"),
        ("v0v1", "1", "v1v0"),
        ("v1v0", "0", "v0v1"),
        ("v1v0", "1", "v0v1"),
    ],
    "v0v1",
)

# binary words without two consecutive 1s
GOLDEN_MEAN = Presentation.build(
    BINARY, ["g0", "g1"], [("g0", "0", "g0"), ("g0", "1", "g1"), ("g1", "0", "g0")], "g0"
)

# the single word (01)^inf
TWO_CYCLE = Presentation.build(BINARY, ["c0", "c1"], [("c0", "0", "c1"), ("c1", "1", "c0")], "c0")

# a b^inf and a c^inf behind the same first letter
BRANCHING = Presentation.build(
    ("a", "b", "c"),
    ["n0", "n1", "n2"],
    [("n0", "a", "n1"), ("n0", "a", "n2"), ("n1", "b", "n1"), ("n2", "c", "n2")],
    "n0",
)

# 0^inf together with every 0^k 1 2^inf
Q0 = Presentation.build(
    DIGITS, ["v0", "v1"], [("v0", "0", "v0"), ("v0", "1", "v1"), ("v1", "2", "v1")], "v0"
)

# the single word 3 2^inf
Q1 = Presentation.build(DIGITS, ["v2", "v3"], [("v2", "3", "v3"), ("v3", "2", "v3")], "v2")

# reachable interleaving product of Q0 and Q1 (7 vertices, not minimal)
Q0_Q1_PRODUCT = Presentation.build(
    DIGITS,
    ["v0v2", "v2v0", "v2v1", "v0v3", "v1v3", "v3v0", "v3v1"],
    [
        ("v0v2", "0", "v2v0"),
        ("v0v2", "1", "v2v1"),
        ("v2v0", "3", "v0v3"),
        ("v2v1", "3", "v1v3"),
        ("v0v3", "0", "v3v0"),
        ("v0v3", "1", "v3v1"),
        ("v3v0", "2", "v0v3"),
        ("v1v3", "2", "v3v1"),
        ("v3v1", "2", "v1v3"),
    ],
    "v0v2",
)

# the same language after merging v1v3 into v3v1
Q0_Q1_MINIMAL = Presentation.build(
    DIGITS,
    ["v0v2", "v2v0", "v2v1", "v0v3", "v3v0", "v3v1"],
    [
        ("v0v2", "0", "v2v0"),
        ("v0v2", "1", "v2v1"),
        ("v2v0", "3", "v0v3"),
        ("v2v1", "3", "v3v1"),
        ("v0v3", "0", "v3v0"),
        ("v0v3", "1", "v3v1"),
        ("v3v0", "2", "v0v3"),
        ("v3v1", "2", "v3v1"),
    ],
    "v0v2",
)

# rho-shaped leveled graph: a tail v0 -> v1 into the cycle v2 -> ... -> v7 -> v2
LEVELED_RHO = Presentation.build(
    DIGITS,
    [f"v{i}" for i in range(8)],
    [
        ("v0", "1", "v1"),
        ("v1", "0", "v2"),
        ("v1", "2", "v2"),
        ("v2", "1", "v3"),
        ("v3", "1", "v4"),
        ("v3", "2", "v4"),
        ("v4", "3", "v5"),
        ("v5", "1", "v6"),
        ("v6", "0", "v7"),
        ("v6", "1", "v7"),
        ("v6", "3", "v7"),
        ("v7", "3", "v2"),
    ],
    "v0",
)

ZEROS = Presentation.build(BINARY, ["z"], [("z", "0", "z")], "z")
ONES = Presentation.build(BINARY, ["o"], [("o", "1", "o")], "o")
TWOS = Presentation.build(DIGITS, ["t"], [("t", "2", "t")], "t")
ALTERNATING_10 = Presentation.build(BINARY, ["a0", "a1"], [("a0", "1", "a1"), ("a1", "0", "a0")], "a0")


def with_sink(p: Presentation, source: str, symbol: str, sink: str = "d") -> Presentation:
    """``p`` plus a fresh dead-end vertex entered from ``source``."""
    alphabet = p.alphabet.symbols
    if symbol not in alphabet:
        alphabet = alphabet + (symbol,)
    return Presentation.build(
        alphabet,
        list(p.vertices) + [sink],
        p.named_edges() + [(source, symbol, sink)],
        p.vertices[p.initial],
    )


def with_isolated(p: Presentation, name: str = "z") -> Presentation:
    """``p`` plus a fresh vertex carrying a self-loop but unreachable."""
    a = p.alphabet[0]
    return Presentation.build(
        p.alphabet,
        list(p.vertices) + [name],
        p.named_edges() + [(name, a, name)],
        p.vertices[p.initial],
    )
