# Leveled sets, exponents, factor sets and complete factorization trees
from pathsets import (complete_factorization, factor_set, factorization_exponent,
                      interleave, is_leveled, leveled_envelope, minimize,
                      missing_configuration, self_loop_criterion)
from pathsets import fixtures as fx

f2 = minimize(fx.FULL_SHIFT)
gm = minimize(fx.GOLDEN_MEAN)
c2 = minimize(fx.TWO_CYCLE)
q0, q1 = minimize(fx.Q0), minimize(fx.Q1)
rho = minimize(fx.LEVELED_RHO)

# leveled = every vertex sends all its edges to one place
for name, p in [("F2", f2), ("GM", gm), ("C2", c2), ("rho", rho)]:
    print(name, is_leveled(p), factorization_exponent(p))

print(leveled_envelope(gm))                 # smallest leveled superset: F2
print(missing_configuration(gm))            # 11 at position 0 never happens
print(missing_configuration(q0))

print(len(factor_set(c2)))                  # 4, the last one first shows up at n = 3

p = interleave([q0, q1])
print(factorization_exponent(p))            # 2
tree = complete_factorization(p)
print("\n".join(tree.lines()))

# nesting works too
deep = complete_factorization(interleave([interleave([gm, q0]), gm]))
print("\n".join(deep.lines()))

print(self_loop_criterion(q0), self_loop_criterion(c2))
