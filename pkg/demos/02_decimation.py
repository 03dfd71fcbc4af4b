# Shifts, decimations and the finite set of all decimations
from pathsets import (decimate, full_decimation_set, kernel, minimize,
                      position_alphabets, shift, weak_shift_orbit)
from pathsets import fixtures as fx
from pathsets.graphfile import dumps

q0 = minimize(fx.Q0)
q1 = minimize(fx.Q1)
c2 = minimize(fx.TWO_CYCLE)                 # the single word 0101...

print(dumps(shift(q0, 1)))                  # dropping a letter lets 2^inf in
print(dumps(shift(q1, 1)))                  # 3 2 2 2 ... -> 2 2 2 ...

# keep every third letter starting at offset 1: 1, 0, 1, 0, ...
print(dumps(decimate(c2, (1, 3))))

# S^j P eventually cycles
for name, p in [("F2", minimize(fx.FULL_SHIFT)), ("Q1", q1), ("C2", c2)]:
    print(name, weak_shift_orbit(p))

print(position_alphabets(q0))               # {0,1} then {0,1,2} forever

# closure under "drop a letter" and "keep every other letter"
for p in kernel(c2, 2):
    print(p)

# every decimation psi_{j,n}, for all j and n at once
for p in full_decimation_set(q1):
    print(p)
