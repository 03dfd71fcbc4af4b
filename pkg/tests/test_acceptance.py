"""The twelve acceptance criteria, one test each.

Every test logs a ``PASS``/``FAIL`` line; the full list is repeated in the
terminal summary.
"""

from math import factorial, prod

from pathsets import (
    INFINITE,
    certified_decimations,
    complete_factorization,
    decimate,
    determinize,
    equals,
    factor_set,
    factorization_exponent,
    initial_blocks,
    interleave,
    interleave_product,
    interleaving_closure,
    interleaving_factors,
    is_leveled,
    is_n_factorizable,
    leveled_envelope,
    minimize,
    prune,
    restrict_reachable,
    self_loop_criterion,
    shift_presentation,
    union,
    weak_shift_orbit,
    word_path_set,
)
from pathsets import fixtures as fx
from pathsets.decimation import _unlabeled, relation_powers
from pathsets.factorization import tree_reassembles
from pathsets.graphfile import dumps, load, parse, to_dot
from pathsets.oracle import blocks_decimate, blocks_interleave, blocks_of

from helpers import C2, F2, ONES, Q0, Q1, ZEROS, count_blocks, loop_word, pool, raw_pool, record

# the shared random instances: minimal presentations with at most 5 vertices
RANDOM = pool(1000, 500, max_vertices=5, max_symbols=3, max_minimal=5)
RAW = raw_pool(1001, 500)
BLOCK_BUDGET = 2000


def test_ac01_full_shift_double_cover():
    def check():
        g = interleave_product([fx.FULL_SHIFT_A, fx.FULL_SHIFT_B])
        assert len(g.vertices) == 2
        assert g.vertices == fx.FULL_SHIFT_PRODUCT.vertices
        assert sorted(g.named_edges()) == sorted(fx.FULL_SHIFT_PRODUCT.named_edges())
        p = minimize(g)
        assert len(p) == 1 and equals(p, F2)
        return "2 product states, 1 minimal"

    record(1, "full-shift interleaving product and its minimization", check)


def test_ac02_q0_q1_product():
    def check():
        g = interleave_product([fx.Q0, fx.Q1])
        assert len(g.vertices) == 7
        assert sorted(g.named_edges()) == sorted(fx.Q0_Q1_PRODUCT.named_edges())
        p = minimize(g)
        assert len(p) == 6
        assert equals(p, minimize(fx.Q0_Q1_MINIMAL))
        assert equals(decimate(p, (0, 2)), Q0)
        assert equals(decimate(p, (1, 2)), Q1)
        return "7 product states, 6 minimal, factors recovered"

    record(2, "Q0/Q1 interleaving product, minimization and factor recovery", check)


def test_ac03_closure_identities():
    def check():
        sample = RANDOM[:200]
        assert all(len(p) <= 5 and len(p.alphabet) <= 3 for p in sample)
        for p in sample:
            blocks = initial_blocks(p, 8)
            for n in range(1, 5):
                c = interleaving_closure(p, n)
                assert blocks <= initial_blocks(c, 8), (p, n)
                assert equals(interleaving_closure(c, n), c), (p, n)
                for j in range(n):
                    assert equals(decimate(c, (j, n)), decimate(p, (j, n))), (p, j, n)
        return "200 sets, n <= 4"

    record(3, "containment, idempotence and decimation invariance of closures", check)


def test_ac04_oracle_differential():
    def check():
        small = pool(1004, 500, max_vertices=4, max_minimal=4)
        dec_checks = int_checks = 0
        for i, p in enumerate(RANDOM):
            for n in range(1, 5):
                for j in range(n):
                    d = 6
                    while d > 1 and count_blocks(p, j + n * d) > BLOCK_BUDGET:
                        d -= 1
                    want = blocks_decimate(blocks_of(p, j + n * d), j, n)
                    assert blocks_of(decimate(p, (j, n)), d) == want, (p, j, n, d)
                    dec_checks += 1
            n = 1 + i % 3
            comps = [small[(i + k * 167) % len(small)] for k in range(n)]
            q = interleave(comps)
            L = 5
            while L > 1 and count_blocks(q, n * L) > BLOCK_BUDGET:
                L -= 1
            assert blocks_of(q, n * L) == blocks_interleave([blocks_of(c, L) for c in comps])
            int_checks += 1
        return f"{dec_checks} decimation and {int_checks} interleaving comparisons"

    record(4, "block-level decimation and interleaving laws on 500 instances", check)


def test_ac05_size_bounds():
    def check():
        for g in RAW:
            h = restrict_reachable(prune(g))
            if not h.is_empty:
                assert len(determinize(h).vertices) <= 2 ** len(h.vertices) - 1
        for i, p in enumerate(RANDOM):
            m = len(p)
            for j in range(5):
                assert len(shift_presentation(p, j).vertices) <= m + 1
            for n in range(1, 5):
                for j in range(n + 2):
                    assert len(decimate(p, (j, n))) <= 2 ** (m + 1) - 1
            comps = [p, RANDOM[(i + 1) % len(RANDOM)], RANDOM[(i + 2) % len(RANDOM)]][: 1 + i % 3]
            bound = len(comps) * prod(len(c) for c in comps)
            assert len(interleave_product(comps).vertices) <= bound
            assert len(interleave_product(comps, reachable=False).vertices) == bound
            leveled = is_leveled(p)
            for n in range(2, 5):
                if is_n_factorizable(p, n):
                    for q in interleaving_factors(p, n):
                        assert len(q) <= m
                        assert leveled or len(q) < m
        return f"{len(RAW)} raw presentations, {len(RANDOM)} path sets"

    record(5, "vertex-count bounds of every construction", check)


def test_ac06_dichotomy():
    def check():
        sample = pool(1006, 200, max_minimal=6)
        finite = 0
        for p in sample:
            lev = is_leveled(p)
            assert lev == equals(p, leveled_envelope(p))
            assert lev == all(is_n_factorizable(p, n) for n in range(1, 6))
            if lev:
                continue
            finite += 1
            f = factorization_exponent(p)
            assert f != INFINITE
            good = {n for n in range(1, 9) if is_n_factorizable(p, n)}
            assert good == {d for d in range(1, f + 1) if f % d == 0}
        return f"{finite} finitely and {len(sample) - finite} infinitely factorizable"

    record(6, "three infinite-factorizability tests agree; exponent divisor sets", check)


def test_ac07_two_cycle_factor_set():
    def check():
        c10 = loop_word("10")
        found = factor_set(C2)
        assert len(found) == 4
        assert set(found) == {C2, c10, ZEROS, ONES}
        m = len(C2)
        below = {decimate(C2, (j, n)) for n in range(1, 2 * m - 1) for j in range(n)}
        assert c10 not in below
        assert c10 in {decimate(C2, (j, 2 * m - 1)) for j in range(2 * m - 1)}
        return "4 factors, (10)^inf first at n = 3"

    record(7, "factor set of the two-cycle and sharpness of the level bound", check)


def test_ac08_complete_factorization():
    def check():
        tree = complete_factorization(interleave([Q0, Q1]))
        assert tree.shape() == ("factored", 2, ["indecomposable", "leveled"])
        assert equals(tree.children[0].value, Q0)
        assert equals(tree.children[1].value, Q1)
        assert tree_reassembles(tree)
        deepest = 0
        for p in RANDOM:
            t = complete_factorization(p)
            m = len(p)
            assert t.depth() <= m - 1
            assert len(t.leaves()) <= factorial(m - 1)
            assert tree_reassembles(t)
            deepest = max(deepest, t.depth())
        return f"max depth {deepest} over {len(RANDOM)} sets"

    record(8, "complete factorization tree of the Q0/Q1 interleaving and tree bounds", check)


def test_ac09_self_interleaving():
    def check():
        hits = 0
        for p in RANDOM:
            if not self_loop_criterion(p):
                continue
            for n in range(2, 5):
                if is_n_factorizable(p, n):
                    factors = interleaving_factors(p, n)
                    assert all(equals(q, factors[0]) for q in factors), (p, n)
                    hits += 1
        assert hits > 0
        return f"{hits} factorizations checked"

    record(9, "initial self-loop forces equal factors", check)


def _shifts(p, count):
    # S^{t+1} P is the union of the one-letter residuals of S^t P
    out = [p]
    for _ in range(count - 1):
        q = out[-1]
        nxt = None
        for a in q.alphabet:
            r = word_path_set(q, (a,))
            if not r.is_empty:
                nxt = r if nxt is None else union(nxt, r)
        out.append(nxt)
    return out


def test_ac10_weak_shift_orbit():
    def check():
        longest = 0
        for p in RANDOM:
            j, k = weak_shift_orbit(p)
            assert 0 <= j < k
            seq = _shifts(p, k + 1)
            assert equals(seq[j], seq[k])
            # all earlier shifts are distinct, so no lexicographically smaller pair repeats
            assert len(set(seq[:k])) == k
            longest = max(longest, k)
        return f"largest k = {longest}"

    record(10, "weak shift-invariance orbit is found and minimal", check)


def test_ac11_full_decimation_set():
    def check():
        sample = [p for p in RANDOM if len(p) <= 4]
        widest = 0
        for p in sample:
            certified = {q for q, _ in certified_decimations(p)}
            grid = {decimate(p, (j, n)) for n in range(1, 7) for j in range(7)}
            assert grid <= certified
            bound = len(relation_powers(_unlabeled(p.relations())))
            widest = max(widest, bound)
            extended = grid | {
                decimate(p, (j, n)) for n in range(1, bound + 1) for j in range(bound)
            }
            assert certified <= extended
        return f"{len(sample)} sets, certificate bound up to {widest}"

    record(11, "certified full decimation set matches the decimation grid", check)


def test_ac12_cli_golden():
    from test_cli import CASES, DATA, GOLDEN, invoke

    def check():
        for name, argv, code in CASES:
            got, out, _ = invoke(argv)
            assert got == code, name
            assert out.encode() == (GOLDEN / f"{name}.out").read_bytes(), name
        files = [f for f in sorted(DATA.glob("*.pg")) if not f.stem.startswith("bad")]
        for f in files:
            g = load(f)
            assert parse(dumps(g)) == g
            assert to_dot(g).startswith('digraph "pathset" {')
        return f"{len(CASES)} golden outputs, {len(files)} round-trips"

    record(12, "CLI golden outputs, graph-file round-trips and DOT export", check)
