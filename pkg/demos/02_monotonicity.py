"""
Monotonicity holds for vectors but not for matrices
===================================================
"""

import numpy as np

from abelcodes import apparent_value, vec_apparent
from abelcodes.worked import nonmonotone_pair

# one variable: more nonzeros never raises the apparent distance
v = np.zeros(15, dtype=bool)
v[[5, 6, 7]] = True
w = v.copy()
w[0] = True
print(vec_apparent(v), ">=", vec_apparent(w))

# two variables: N sits strictly inside M, yet M has the larger value
N, M = nonmonotone_pair()
print("N < M:", N < M)
print("Delta(N) =", apparent_value(N), " Delta(M) =", apparent_value(M))
