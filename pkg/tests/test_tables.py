import pytest

from abelcodes.codes import dimension
from abelcodes.oracle import min_distance_bruteforce
from abelcodes.orbits import cyclotomic_coset
from abelcodes.tables import (
    CSV_COLUMNS,
    TABLE1,
    TABLE2,
    TABLE3,
    TABLE4,
    TableRow,
    build_row,
    rational_shift_near,
    regenerate,
    table_inputs,
)
from abelcodes.transform import divides_xr_minus_one


@pytest.fixture(scope="module", params=[1, 2, 3, 4])
def rows(request):
    return request.param, regenerate(request.param)


def bch_dimension(q, dims, gamma, delta, offsets):
    """|I| - |D| for D = union of stripes, counted from cyclotomic cosets alone."""
    sizes = {}
    for k, d, b in zip(gamma, delta, offsets):
        r = dims[k - 1]
        sizes[k] = len({x for l in range(d - 1) for x in cyclotomic_coset(b + l, q, r)})
    r1, r2 = dims
    z1, z2 = sizes.get(1, 0), sizes.get(2, 0)
    return r1 * r2 - (z1 * r2 + z2 * r1 - z1 * z2)


def test_factors_divide(rows):
    which, _ = rows
    _, a_map, b_map = table_inputs(which)
    for f in [*a_map.values(), *b_map.values()]:
        assert divides_xr_minus_one(f)


def test_every_row_is_certified(rows):
    _, out = rows
    for r in out:
        assert r.d_certified == r.delta


@pytest.mark.parametrize("which", [1, 2, 4])
def test_rows_match_reference(which):
    bad = [(i, r.mismatches()) for i, r in enumerate(regenerate(which)) if not r.ok]
    assert bad == []


def test_table3_parameters_and_distances():
    for r, (gamma, offs, _, dd) in zip(regenerate(3), TABLE3):
        assert tuple(r.inputs["gamma"]) == gamma
        assert tuple(r.inputs["offsets"]) == offs
        assert r.delta == dd


@pytest.mark.parametrize("which", [3, 4])
def test_bch_dimensions_match_coset_count(which):
    ctx, _, _ = table_inputs(which)
    for r in regenerate(which):
        want = bch_dimension(2, ctx.lengths, r.inputs["gamma"], r.inputs["delta_designed"], r.inputs["offsets"])
        assert r.dimension == want


def test_shift_fallback_is_recorded():
    out = regenerate(2)
    assert [(r.inputs["h2"], r.inputs["h2_used"]) for r in out] == [(1, 1), (1, 0), (3, 3), (1, 1), (1, 5)]
    _, _, b_map = table_inputs(2)
    assert rational_shift_near(b_map["b'2"], 1)[0] == 0


@pytest.mark.parametrize("index", [1, 2])
def test_smallest_rows_against_exhaustive_search(index):
    con, _ = build_row(1, index)
    assert dimension(con.code) == 24
    assert min_distance_bruteforce(con.code, cap_k=24) == con.guaranteed_d == 16


def test_row_reporting():
    r = TableRow({"gamma": [2], "offsets": [5], "expected_gamma": [2], "expected_offsets": [0]}, 10, 3, 3, (10, 3))
    assert not r.ok and r.mismatches() == ["offsets [5] != [0]"]
    assert set(CSV_COLUMNS[3]) <= set(r.to_dict())
    with pytest.raises(ValueError):
        table_inputs(5)


def test_reference_tables_have_expected_sizes():
    assert (len(TABLE1), len(TABLE2), len(TABLE3), len(TABLE4)) == (12, 5, 12, 5)
