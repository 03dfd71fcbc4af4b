# How often do random path sets factor?
from collections import Counter

from pathsets import complete_factorization, factorization_exponent
from pathsets.sampling import random_pathsets

sets = random_pathsets(seed=7, count=300, max_minimal=6)
print(Counter(len(p) for p in sets))                     # minimal sizes

exps = Counter(str(factorization_exponent(p)) for p in sets)
print(exps)                                              # 'inf' = leveled

shapes = Counter(str(complete_factorization(p).shape()) for p in sets)
for shape, count in shapes.most_common(6):
    print(count, shape)
