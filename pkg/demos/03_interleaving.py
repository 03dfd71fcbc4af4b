# Interleaving products, closures and factorizations
from pathsets import (interleave, interleave_product, interleaving_closure,
                      interleaving_factors, is_n_factorizable, minimize)
from pathsets import fixtures as fx
from pathsets.graphfile import dumps

q0, q1 = minimize(fx.Q0), minimize(fx.Q1)

# states are (phase, rotated tuple of component vertices)
g = interleave_product([fx.Q0, fx.Q1])
print(dumps(g))                              # 7 reachable states
print(len(interleave_product([fx.Q0, fx.Q1], reachable=False).vertices))  # 8

p = interleave([q0, q1])
print(len(p))                                # 6 after minimization

# two copies of the full shift interleave to the full shift again
print(dumps(interleave_product([fx.FULL_SHIFT_A, fx.FULL_SHIFT_B])))

gm = minimize(fx.GOLDEN_MEAN)
print(interleaving_closure(gm, 2))           # the full shift: no 11 constraint survives
print(is_n_factorizable(gm, 2), is_n_factorizable(p, 2))

# factors come back out by decimation
a, b = interleaving_factors(p, 2)
print(a == q0, b == q1)
