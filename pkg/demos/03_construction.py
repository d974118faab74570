"""
Codes whose apparent distance equals their minimum distance
===========================================================

Take divisors a of X^3 - 1 and b of X^45 - 1 over F_2.  After shifting each by a
power of X so that its values at the chosen roots lie in F_2, the product
X^h1 a * X^h2 b is the transform of a binary codeword.  The principal ideal it
generates has minimum distance Delta(M(a)) * Delta(M(b)), certified by that
codeword.
"""

from abelcodes import (
    bch_defining_set,
    bch_spec_from_factors,
    certify_with_witness,
    construct_true_distance_code,
    dimension,
    prune_defining_set,
    rational_shift,
)
from abelcodes.codes import AbelianCode
from abelcodes.worked import shifted_3x45

a, b, roots = shifted_3x45()
alpha = roots.roots(a.ctx, (3, 45))

h1 = rational_shift(a, alpha[0])
h2 = rational_shift(b, alpha[1])
print("shifts", h1, h2)

con = construct_true_distance_code(a, b, roots, h1, h2)
print("dimension", dimension(con.code), con.certificate())

# drop defining orbits while the same codeword still certifies the distance
bigger = prune_defining_set(con.code, con.witness)
print("pruned dimension", dimension(bigger), "d =", certify_with_witness(bigger, con.witness))

# the bivariate BCH code read off the zero runs of the shifted factors
spec = bch_spec_from_factors(a.shift(h1), b.shift(h2))
bch = AbelianCode(con.code.ctx, bch_defining_set(spec, 2, (3, 45)), roots)
print(spec.to_dict(), "dimension", dimension(bch), "d =", certify_with_witness(bch, con.witness))
