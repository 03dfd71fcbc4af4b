# Presentations, minimization and the basic set operations
from pathsets import (equals, initial_blocks, intersection, minimize, union,
                      word_path_set)
from pathsets import fixtures as fx
from pathsets.graphfile import dumps

# a pointed graph is just alphabet + vertices + labeled edges + a marked vertex
print(dumps(fx.GOLDEN_MEAN))

gm = minimize(fx.GOLDEN_MEAN)
f2 = minimize(fx.FULL_SHIFT)
print(gm)                           # canonical form, vertices renamed v0, v1, ...
print(sorted(initial_blocks(gm, 3), key=lambda w: (len(w), w)))

# nondeterministic input goes through the subset construction
print(dumps(minimize(fx.BRANCHING)))

# the 7-vertex product graph has two vertices with the same future
big = minimize(fx.Q0_Q1_PRODUCT)
print(len(fx.Q0_Q1_PRODUCT.vertices), "->", len(big))

# equality is structural on canonical forms
print(equals(minimize(fx.FULL_SHIFT_PRODUCT), f2))   # True

print(equals(intersection(f2, gm), gm))     # GM sits inside F2
print(equals(union(gm, f2), f2))
zeros, ones = minimize(fx.ZEROS), minimize(fx.ONES)
print(dumps(union(zeros, ones)))            # fresh initial vertex, two loops

q0 = minimize(fx.Q0)
print(word_path_set(q0, ("0", "1")))        # what can follow 01: only 2^inf
print(word_path_set(q0, ("2",)).is_empty)   # Q0 never starts with 2
