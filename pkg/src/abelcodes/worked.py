"""Small worked instances used by the demos, the tests and the bundled data files."""

from __future__ import annotations

from .apparent import SupportHypermatrix, from_orbit_reps
from .codes import AbelianCode, RootSelection, code_with_nonzeros, make_code
from .construct import root_with_minimal_polynomial
from .gfield import make_context
from .orbits import orbit_closure, q_orbit
from .transform import MultiPoly, from_terms

# defining-set representatives of a binary 7x7 code with d = 9 reached at the first bmad step
CODE_7X7_REPS = [(0, 3), (1, 3), (1, 5), (1, 6), (3, 0), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6)]
# exponents of a divisor of Y^45 - 1 over F_2 with 21 terms
DIV45_EXPONENTS = [40, 39, 38, 36, 35, 32, 30, 25, 24, 23, 21, 20, 17, 15, 10, 9, 8, 6, 5, 2, 0]
# Y^12 + Y^3 + 1, constant term first
MINPOLY_45 = [1, 0, 0, 1] + [0] * 8 + [1]


def code_7x7() -> AbelianCode:
    return make_code(2, 1, (7, 7), CODE_7X7_REPS)


def nonmonotone_pair() -> tuple[SupportHypermatrix, SupportHypermatrix]:
    """(N, M) at dims (5, 7) with supp N strictly inside supp M and Delta(N) < Delta(M)."""
    N = from_orbit_reps([(1, 0), (1, 3)], 2, (5, 7))
    M = from_orbit_reps([(0, 0), (1, 0), (1, 3)], 2, (5, 7))
    return N, M


def single_orbit_5x9() -> AbelianCode:
    """Binary minimal code in (5, 9) whose only nonzero orbit is that of (1, 3)."""
    ctx = make_context(2, 1, (5, 9))
    return code_with_nonzeros(ctx, q_orbit((1, 3), 2, (5, 9)))


def factorizable_5x5() -> tuple[MultiPoly, AbelianCode]:
    """A generator g = a b F at dims (5, 5) and the code whose nonzeros are supp(M(g))."""
    ctx = make_context(2, 1, (5, 5))
    g = from_terms(ctx, (5, 5), [(4, 4), (3, 4), (4, 2), (3, 3), (2, 2), (1, 3), (2, 1), (1, 1)])
    C = code_with_nonzeros(ctx, orbit_closure([(1, 1), (1, 3)], 2, (5, 5)))
    return g, C


def rectangle_3x7() -> tuple[MultiPoly, MultiPoly]:
    """Univariate a, b with X^h a and X^h b dividing X^r - 1 for suitable h."""
    ctx = make_context(2, 1, (3, 7))
    return from_terms(ctx, (3,), [1, 2]), from_terms(ctx, (7,), [1, 2, 4])


def non_divisor_5x7() -> tuple[MultiPoly, MultiPoly]:
    """Same b as rectangle_3x7 but an a with no shift dividing X^5 - 1."""
    ctx = make_context(2, 1, (5, 7))
    return from_terms(ctx, (5,), [1, 2, 3, 4]), from_terms(ctx, (7,), [1, 2, 4])


def shifted_3x45() -> tuple[MultiPoly, MultiPoly, RootSelection]:
    """a = 1 + X, the 21-term divisor b of Y^45 - 1, and roots with alpha_2 a zero of Y^12 + Y^3 + 1."""
    ctx = make_context(2, 1, (3, 45))
    a = from_terms(ctx, (3,), [0, 1])
    b = from_terms(ctx, (45,), DIV45_EXPONENTS)
    u2 = root_with_minimal_polynomial(ctx, 45, MINPOLY_45)
    return a, b, RootSelection((1, u2))
