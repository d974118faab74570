import numpy as np
import pytest

from abelcodes.apparent import afforded, apparent_value, pattern_of
from abelcodes.codes import RootSelection, code_apparent_at, dimension, make_code
from abelcodes.construct import (
    BchSpec,
    ConstructionError,
    bch_defining_set,
    bch_spec_from_factors,
    certify_with_witness,
    check_condition_imposed,
    construct_true_distance_code,
    cyclic_bch_parameters,
    divisor_shift,
    factor_abF,
    is_cp_matrix,
    product_apparent_check,
    prune_defining_set,
    rational_exponents,
    rational_shift,
    recognize_bivariate_bch,
    verify_true_distance,
)
from abelcodes.gfield import make_context, primitive_root
from abelcodes.oracle import min_distance_bruteforce
from abelcodes.orbits import cyclotomic_coset, orbit_closure
from abelcodes.transform import dft, from_terms, lift, nonzero_root_count, outer
from abelcodes.worked import (
    code_7x7,
    factorizable_5x5,
    non_divisor_5x7,
    rectangle_3x7,
    shifted_3x45,
    single_orbit_5x9,
)

ONES = RootSelection((1, 1))


def zbar(f, roots=ONES):
    return dft(f, roots.roots(f.ctx, f.dims)).support()


def test_factorization_of_5x5_generator():
    g, _ = factorizable_5x5()
    holds, an = check_condition_imposed(g, ONES)
    assert holds and an.value == an.zbar == 8
    assert an.involved_rows == (2, 3) and an.involved_cols == (1, 4)
    a, b, F = factor_abF(g, an)
    assert lift(a) == [1, 1] and lift(b) == [1, 1]
    assert F.support_set() == {(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)}
    assert outer(a, b) * F == g


def test_involved_rows_count_nonzero_roots():
    # epsilon_1 counts nonzero roots of an involved row, omega_1 the zero coefficients around it
    g, _ = factorizable_5x5()
    _, an = check_condition_imposed(g, ONES)
    ctx = g.ctx
    al = ONES.roots(ctx, g.dims)
    for k in an.involved_rows:
        row = from_terms(ctx, (5,), {j: int(g.coeffs[k, j]) for j in range(5) if g.coeffs[k, j]})
        assert an.epsilon[0] == nonzero_root_count(row, (al[1],))


def test_cp_rectangle_3x7():
    a, b = rectangle_3x7()
    g = outer(a, b)
    assert is_cp_matrix(pattern_of(g)) == ((1, 2), (1, 2, 4))
    assert divisor_shift(a) == 2 and divisor_shift(b) == 6
    holds, an = check_condition_imposed(g, ONES)
    assert holds and apparent_value(pattern_of(g)) == 8 == an.zbar
    # Zbar(ab) = Zbar(a) x Zbar(b)
    za, zb = zbar(a, RootSelection((1,))), zbar(b, RootSelection((1,)))
    assert np.array_equal(zbar(g), np.outer(za, zb))


def test_cp_without_divisor_shift_5x7():
    a, b = non_divisor_5x7()
    g = outer(a, b)
    assert divisor_shift(a) is None
    assert apparent_value(pattern_of(g)) == 8
    assert int(zbar(g).sum()) == 16
    holds, _ = check_condition_imposed(g, ONES)
    assert not holds
    with pytest.raises(ValueError):
        factor_abF(g, check_condition_imposed(g, ONES)[1])


def test_non_cp_pattern():
    p = np.zeros((3, 5), dtype=bool)
    p[0, 0] = p[1, 1] = True
    assert is_cp_matrix(p) is None


def test_shifted_3x45_construction():
    a, b, roots = shifted_3x45()
    assert roots.u == (1, 1)
    al = roots.roots(a.ctx, (3, 45))
    assert rational_shift(a, al[0]) == 1
    assert rational_shift(b, al[1]) == 5
    con = construct_true_distance_code(a, b, roots, 1, 5)
    assert con.guaranteed_d == con.bmad == con.witness.weight() == 10
    assert con.delta_factors == (2, 5)
    assert dimension(con.code) == 42
    assert certify_with_witness(con.code, con.witness) == 10


def test_construction_rejects_bad_inputs():
    a, b, roots = shifted_3x45()
    with pytest.raises(ConstructionError):
        construct_true_distance_code(a, b, roots, 0, 5)
    ctx = make_context(2, 1, (3, 7))
    with pytest.raises(ConstructionError):
        construct_true_distance_code(from_terms(ctx, (3,), [0, 2, 1]) * from_terms(ctx, (3,), [0]),
                                     from_terms(ctx, (7,), [0, 2]), ONES, 0, 0)


def test_construction_certificate_matches_oracle_on_small_case():
    a, b = rectangle_3x7()
    a, b = a.shift(divisor_shift(a)), b.shift(divisor_shift(b))
    al = ONES.roots(a.ctx, (3, 7))
    h1, h2 = rational_shift(a, al[0]), rational_shift(b, al[1])
    con = construct_true_distance_code(a, b, ONES, h1, h2)
    assert con.guaranteed_d == 8
    assert min_distance_bruteforce(con.code) == 8
    assert all(rational_shift(b.shift(h2), al[1] ** u) == 0 for u in rational_exponents(b, h2))


def test_pruning_keeps_the_certificate():
    a, b, roots = shifted_3x45()
    con = construct_true_distance_code(a, b, roots, 1, 5)
    P = prune_defining_set(con.code, con.witness)
    assert P.defining_set.issubset(con.code.defining_set)
    assert dimension(P) >= dimension(con.code)
    assert certify_with_witness(P, con.witness) == 10


def test_verification_on_worked_codes():
    v = verify_true_distance(code_7x7())
    assert v.status == "proven" and v.d == 9 and v.start_step == 0
    assert is_cp_matrix(v.witness) == ((0, 1, 2, 4), (0, 1, 2, 4))
    assert apparent_value(v.witness) == 9
    assert verify_true_distance(single_orbit_5x9()).d == 24
    _, C = factorizable_5x5()
    assert verify_true_distance(C).d == 8
    with pytest.raises(ValueError):
        verify_true_distance(code_7x7(), orbit_cap=1)


def test_cyclic_bch_parameters():
    D = set(cyclotomic_coset(1, 2, 15)) | set(cyclotomic_coset(3, 2, 15))
    assert cyclic_bch_parameters(D, 2, 15) == (5, 1)
    # C(1) u C(9) modulo 15 is not a consecutive coset union
    assert cyclic_bch_parameters(set(cyclotomic_coset(1, 2, 15)) | {9}, 2, 15) is None
    assert cyclic_bch_parameters(set(), 2, 15) is None


def test_bivariate_bch_round_trip():
    spec = BchSpec((1, 2), (3, 5), (1, 1))
    D = bch_defining_set(spec, 2, (7, 15))
    C = make_code(2, 1, (7, 15), D.reps())
    got = recognize_bivariate_bch(C)
    assert got.gamma == (1, 2)
    assert bch_defining_set(got, 2, (7, 15)) == D
    whole, d1, d2 = product_apparent_check(C)
    assert whole == d1 * d2


def test_bch_spec_checks():
    with pytest.raises(ValueError):
        BchSpec((1,), (9,), (0,)).check((7, 15))
    with pytest.raises(ValueError):
        BchSpec((3,), (2,), (0,)).check((7, 15))


def test_bch_offsets_from_shifted_factors():
    a, b, _ = shifted_3x45()
    spec = bch_spec_from_factors(a.shift(1), b.shift(5))
    assert spec.delta == (2, 5)
    assert spec.offsets == (0, 1)
    C = make_code(2, 1, (3, 45), bch_defining_set(spec, 2, (3, 45)).reps())
    assert dimension(C) == 58
    assert code_apparent_at(C) == 10
