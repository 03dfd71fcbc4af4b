import random

import pytest

from pathsets import decimate, interleave, intersection, minimize
from pathsets import fixtures as fx
from pathsets.oracle import (
    BlockSet,
    DepthMismatch,
    InvalidBlockSet,
    blocks_decimate,
    blocks_interleave,
    blocks_of,
    equals_blockwise,
    prefix_closure,
)

from helpers import C2, F2, GM, ONES, Q0, Q1, TWOS, ZEROS, count_blocks, loop_word, pool


def words(*ws):
    return frozenset(tuple(w) for w in ws)


class TestBlockSet:
    def test_golden_mean(self):
        assert blocks_of(GM, 3).as_set() == words(
            "", "0", "1", "00", "01", "10", "000", "001", "010", "100", "101"
        )

    def test_full_shift(self):
        assert blocks_of(F2, 1).as_set() == words("", "0", "1")

    def test_empty(self):
        assert blocks_of(intersection(Q0, Q1), 4).blocks == ()

    def test_sorted(self):
        b = blocks_of(GM, 2)
        assert b.blocks == ((), ("0",), ("1",), ("0", "0"), ("0", "1"), ("1", "0"))
        assert b.full == [("0", "0"), ("0", "1"), ("1", "0")]

    def test_rejects_missing_prefix(self):
        with pytest.raises(InvalidBlockSet):
            BlockSet(2, ((), ("0", "0")))

    def test_rejects_dead_end(self):
        with pytest.raises(InvalidBlockSet):
            BlockSet(2, ((), ("0",), ("1",), ("0", "0")))

    def test_rejects_missing_empty_word(self):
        with pytest.raises(InvalidBlockSet):
            BlockSet(0, (("0",),))

    def test_prefix_closure(self):
        assert prefix_closure([("a", "b")]) == {(), ("a",), ("a", "b")}


class TestDecimate:
    def test_two_cycle(self):
        got = blocks_decimate(blocks_of(C2, 6), 1, 3)
        assert got.depth == 2
        assert got.as_set() == blocks_of(loop_word("10"), 2).as_set()

    def test_identity(self):
        b = blocks_of(GM, 5)
        assert blocks_decimate(b, 0, 1) == b

    def test_q1(self):
        got = blocks_decimate(blocks_of(Q1, 6), 1, 2)
        assert got.depth == 3
        assert got.as_set() == blocks_of(TWOS, 3).as_set()

    def test_law(self):
        for p in pool(60, 120):
            for n in range(1, 5):
                for j in range(n):
                    d = 6
                    while d > 1 and count_blocks(p, j + n * d) > 5000:
                        d -= 1
                    want = blocks_decimate(blocks_of(p, j + n * d), j, n)
                    assert blocks_of(decimate(p, (j, n)), d) == want


class TestInterleave:
    def test_two_constants(self):
        got = blocks_interleave([blocks_of(ZEROS, 3), blocks_of(ONES, 3)])
        assert got == blocks_of(C2, 6)

    def test_unary(self):
        b = blocks_of(GM, 4)
        assert blocks_interleave([b]) == b

    def test_q0_q1(self):
        got = blocks_interleave([blocks_of(Q0, 3), blocks_of(Q1, 3)])
        assert got == blocks_of(minimize(fx.Q0_Q1_PRODUCT), 6)

    def test_depth_mismatch(self):
        with pytest.raises(DepthMismatch):
            blocks_interleave([blocks_of(Q0, 3), blocks_of(Q1, 2)])

    def test_law(self):
        ps = pool(61, 200, max_vertices=4)
        rng = random.Random(61)
        for i in range(120):
            n = rng.randint(1, 3)
            comps = rng.sample(ps, n)
            p = interleave(comps)
            L = 5
            while L > 1 and count_blocks(p, n * L) > 5000:
                L -= 1
            assert blocks_of(p, n * L) == blocks_interleave([blocks_of(c, L) for c in comps])


class TestEqualsBlockwise:
    def test_examples(self):
        assert equals_blockwise(fx.Q0_Q1_PRODUCT, fx.Q0_Q1_MINIMAL)
        assert not equals_blockwise(fx.Q0, fx.Q1)
        assert equals_blockwise(fx.FULL_SHIFT, fx.FULL_SHIFT_PRODUCT)

    def test_nondeterministic_input(self):
        d = fx.BRANCHING
        assert equals_blockwise(d, minimize(d).presentation)
