# Word-level cross checks against finite block sets
from pathsets import decimate, interleave, minimize
from pathsets import fixtures as fx
from pathsets.oracle import (blocks_decimate, blocks_interleave, blocks_of,
                             equals_blockwise)

c2 = minimize(fx.TWO_CYCLE)
q0, q1 = minimize(fx.Q0), minimize(fx.Q1)

b = blocks_of(c2, 6)
print(b.blocks)

# decimating the words directly vs. decimating the graph
print(blocks_decimate(b, 1, 3) == blocks_of(decimate(c2, (1, 3)), 2))

# same for interleaving: depth 3 per component gives depth 6 overall
lhs = blocks_interleave([blocks_of(q0, 3), blocks_of(q1, 3)])
print(lhs == blocks_of(interleave([q0, q1]), 6))

# m1 + m2 letters are enough to tell two right-resolving graphs apart
print(equals_blockwise(fx.Q0_Q1_PRODUCT, fx.Q0_Q1_MINIMAL))
print(equals_blockwise(fx.Q0, fx.Q1))
