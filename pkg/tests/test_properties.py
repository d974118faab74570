"""Randomized invariants across the (q, dims) settings shared by the suites."""

from hypothesis import given, settings
from hypothesis import strategies as st

from abelcodes.apparent import apparent_value, bmad, bmad_bruteforce, from_orbit_reps, pattern_of
from abelcodes.bounds import BCH, HT, bch_optimal, bound_set, ht_optimal, to_mask
from abelcodes.codes import RootSelection, code_apparent, code_with_nonzeros, dimension
from abelcodes.oracle import min_distance_bruteforce
from abelcodes.orbits import OrbitSet
from abelcodes.transform import dft, idft, mul, nonzero_root_count

from conftest import SETTINGS, ctx_for, field_polys, orbit_subsets, partition

ORACLE_K = 14
# largest codeword count enumerated for q > 2: the ternary count at k = ORACLE_K
ORACLE_WORDS = 3**ORACLE_K

BOUND_SETS = [bound_set("bch"), bound_set("bch,ht")]
CODE_BOXES = [(2, (5, 7)), (2, (3, 5)), (2, (7, 7)), (2, (3, 15)), (3, (4, 5)), (5, (4, 6)), (3, (2, 5))]


def roots(ctx, dims):
    return RootSelection.default(len(dims)).roots(ctx, dims)


@st.composite
def small_codes(draw, boxes):
    """A code whose nonzero orbits are drawn until the dimension budget runs out."""
    q, dims = draw(st.sampled_from(boxes))
    parts = partition(q, dims)
    order = draw(st.permutations(range(len(parts))))
    budget = draw(st.integers(1, ORACLE_K))
    chosen, k = [], 0
    for i in order:
        size = len(parts[i])
        if k + size <= budget and q ** (k + size) <= ORACLE_WORDS:
            chosen.append(parts[i])
            k += size
    if not chosen:
        chosen.append(min(parts, key=len))
    members = frozenset().union(*(o.members for o in chosen))
    return code_with_nonzeros(ctx_for(q, dims), OrbitSet(dims, q, members))


# (a) weight bound for arbitrary g in L


@settings(max_examples=520)
@given(st.sampled_from(SETTINGS), st.sampled_from(BOUND_SETS), st.data())
def test_apparent_distance_bounds_transform_weight(setting, B, data):
    p, dims = setting
    g = data.draw(field_polys(p, dims))
    if g.is_zero():
        return
    al = roots(ctx_for(p, dims), dims)
    w = idft(g, al).weight()
    assert w == nonzero_root_count(g, al)
    assert apparent_value(pattern_of(g), B) <= w


# (b) the iterative algorithm against exhaustive orbit-subset search


@settings(max_examples=220)
@given(st.sampled_from(SETTINGS + [(2, (7, 7)), (2, (3, 15))]), st.data())
def test_bmad_matches_bruteforce(setting, data):
    q, dims = setting
    orbs = data.draw(orbit_subsets(q, dims, max_orbits=10, min_orbits=1))
    M = from_orbit_reps([o.reps()[0] for o in orbs], q, dims)
    assert bmad(M).result == bmad_bruteforce(M)


# (c) transform round trip and convolution theorem


@settings(max_examples=1100)
@given(st.sampled_from(SETTINGS), st.data())
def test_transform_round_trip_and_star_homomorphism(setting, data):
    p, dims = setting
    ctx = ctx_for(p, dims)
    al = roots(ctx, dims)
    f = data.draw(field_polys(p, dims))
    g = data.draw(field_polys(p, dims))
    F, G = dft(f, al), dft(g, al)
    assert idft(F, al) == f
    # the product in the group algebra becomes the coordinatewise product
    assert dft(mul(f, g), al).coeffs.tolist() == ctx.mul_arr(F.coeffs, G.coeffs).tolist()


# (d) HT never below BCH


@settings(max_examples=520)
@given(st.integers(1, 40), st.data())
def test_ht_dominates_bch(n, data):
    N = to_mask(data.draw(st.sets(st.integers(0, n - 1))), n)
    assert ht_optimal(n, N) >= bch_optimal(n, N)


# (e) apparent distance of a code never exceeds its true distance


@settings(max_examples=150)
@given(small_codes(CODE_BOXES))
def test_code_apparent_at_most_true_distance(C):
    k = dimension(C)
    assert 1 <= k <= ORACLE_K
    assert code_apparent(C) <= min_distance_bruteforce(C, cap_k=ORACLE_K)


# (f) ds-bounds are monotone under inclusion


@settings(max_examples=520)
@given(st.integers(1, 40), st.data())
def test_bounds_monotone_under_inclusion(n, data):
    small = data.draw(st.sets(st.integers(0, n - 1)))
    big = small | data.draw(st.sets(st.integers(0, n - 1)))
    for bound in (BCH, HT):
        assert bound.optimal(n, to_mask(small, n)) <= bound.optimal(n, to_mask(big, n))
    assert bound_set("bch,ht").evaluate(n, to_mask(small, n)) <= bound_set("bch,ht").evaluate(n, to_mask(big, n))
