"""
Apparent distance of a binary 7x7 abelian code
==============================================

A code is given by its defining set.  The matrix it affords marks the
nonzero positions, and the apparent distance of that matrix bounds the
minimum distance from below.
"""

from abelcodes import afforded, bmad, hyper_apparent, min_distance_bruteforce, verify_true_distance
from abelcodes.worked import code_7x7

C = code_7x7()
M = afforded(C.defining_set)
print(M)

# per-axis report: omega counts rows/columns of zeros, epsilon the value inside them
rep = hyper_apparent(M)
print("omega", rep.omega, "epsilon", rep.epsilon, "Delta", rep.value)

# the iterative algorithm stops at once here: no submatrix does better
trace = bmad(M)
for r in trace.to_records():
    print(r)

# an idempotent of weight 9 inside the code proves d = 9 without enumerating anything
print(verify_true_distance(C).to_dict())

# and exhaustive search agrees
print("d =", min_distance_bruteforce(C))
