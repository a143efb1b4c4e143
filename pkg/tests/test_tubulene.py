from fractions import Fraction

import pytest

from gpindex import (
    TubuleneSpec,
    closed_form_gp,
    full_report,
    generate,
    gp_direct,
    is_connected,
    orbit_wiener_closed,
    structural_automorphisms,
    theoretical_orbits,
    vertex_orbits,
    wiener_subset,
)
from gpindex.errors import TubuleneSpecError
from gpindex.tubulene import (
    OrbitId,
    distance_table,
    orbit_ids,
    orbit_members,
    orbit_wiener_sum_closed,
    table_column,
)


@pytest.mark.parametrize("n, h", [(0, 3), (1, 1), (-1, 4)])
def test_spec_validation(n, h):
    with pytest.raises(TubuleneSpecError):
        TubuleneSpec(n, h)


def test_label_bijection():
    spec = TubuleneSpec(3, 4)
    seen = set()
    for i in range(4):
        for k in range(2):
            for j in range(4):
                v = spec.index(i, k, j)
                assert spec.label(v) == (i, k, j)
                seen.add(v)
    assert seen == set(range(32))


def test_zt34_size():
    g = generate(TubuleneSpec(3, 4))
    assert (g.vertex_count, g.edge_count) == (32, 44)


@pytest.mark.parametrize("n, h", [(3, 4), (2, 5), (1, 2), (4, 3)])
def test_degree_profile(n, h):
    spec = TubuleneSpec(n, h)
    g = generate(spec)
    boundary = set(spec.layer_set(0, 0) + spec.layer_set(n, 1))
    for v in range(g.vertex_count):
        assert g.degree(v) == (2 if v in boundary else 3)


def test_each_layer_is_a_ring():
    spec = TubuleneSpec(2, 5)
    g = generate(spec)
    for i in range(3):
        ring = set(spec.layer_set(i, 0) + spec.layer_set(i, 1))
        inside = [e for e in g.edges if set(e) <= ring]
        assert len(inside) == 10
        assert all(sum(1 for e in inside if v in e) == 2 for v in ring)


def test_smallest_tubulene():
    g = generate(TubuleneSpec(1, 2))
    assert (g.vertex_count, g.edge_count) == (8, 10)
    assert is_connected(g)


def test_orbits_odd_n():
    orbits = theoretical_orbits(TubuleneSpec(3, 4))
    assert len(orbits) == 4
    assert all(len(o) == 8 for o in orbits.orbits)


def test_orbits_even_n():
    spec = TubuleneSpec(2, 3)
    assert orbit_ids(spec) == [OrbitId(0, 0), OrbitId(1, 0), OrbitId(None, 1)]
    assert [len(orbit_members(spec, o)) for o in orbit_ids(spec)] == [6, 6, 6]
    assert set(orbit_members(spec, OrbitId(None, 1))) == set(spec.layer_set(1, 0) + spec.layer_set(1, 1))


def test_orbits_n1():
    spec = TubuleneSpec(1, 5)
    assert set(orbit_members(spec, OrbitId(0, 0))) == set(spec.layer_set(0, 0) + spec.layer_set(1, 1))
    assert set(orbit_members(spec, OrbitId(1, 0))) == set(spec.layer_set(0, 1) + spec.layer_set(1, 0))


def test_bad_orbit_ids():
    with pytest.raises(TubuleneSpecError):
        orbit_members(TubuleneSpec(3, 4), OrbitId(None, 1))
    with pytest.raises(TubuleneSpecError):
        orbit_members(TubuleneSpec(3, 4), OrbitId(0, 2))


def test_structural_automorphisms_zt34():
    spec = TubuleneSpec(3, 4)
    autos = structural_automorphisms(spec)
    assert len(autos) == len(set(autos)) == 16
    assert autos.count(tuple(range(32))) == 1 and autos[0] == tuple(range(32))
    assert vertex_orbits(generate(spec), autos) == theoretical_orbits(spec)


@pytest.mark.parametrize("n, h", [(1, 2), (1, 7), (5, 3), (7, 6)])
def test_structural_automorphisms_orbits(n, h):
    spec = TubuleneSpec(n, h)
    assert vertex_orbits(generate(spec), structural_automorphisms(spec)) == theoretical_orbits(spec)


def test_structural_automorphisms_need_odd_n():
    with pytest.raises(TubuleneSpecError):
        structural_automorphisms(TubuleneSpec(2, 3))


def test_orbit_wiener_closed_values():
    spec = TubuleneSpec(3, 7)
    assert orbit_wiener_closed(spec, OrbitId(0, 0)) == 539 == Fraction(7, 2) * (2 * 49 + 42 + 9 + 6 - 1)
    assert orbit_wiener_closed(spec, OrbitId(1, 1)) == 385
    assert orbit_wiener_closed(TubuleneSpec(2, 3), OrbitId(None, 1)) == 27


@pytest.mark.parametrize("n, h", [(3, 7), (4, 3), (6, 8), (5, 5)])
def test_orbit_wiener_closed_matches_bfs(n, h):
    spec = TubuleneSpec(n, h)
    g = generate(spec)
    for oid in orbit_ids(spec):
        assert orbit_wiener_closed(spec, oid) == wiener_subset(g, orbit_members(spec, oid))


def test_table_columns():
    assert table_column("W(O0_0)", 3, 7) == 0
    assert table_column("W(O0_0)", 3, 5) == 1
    assert table_column("W(O1_0)", 3, 5) == 0
    assert table_column("W(O1_0)", 5, 5) == 1


def test_distance_table_zt37():
    t = distance_table(TubuleneSpec(3, 7))
    assert t["d(u,V0_0)"] == 24
    assert t["W(O0_0)"] == 539


@pytest.mark.parametrize(
    "n, h, value, regime",
    [
        (3, 7, 7280, "h-odd,n-odd,n<h-2"),
        (3, 4, 1728, "h-even,n-odd,n=h-1"),
        (5, 4, 4896, "h-even,n-odd,n>=h"),
    ],
)
def test_closed_form_examples(n, h, value, regime):
    r = closed_form_gp(TubuleneSpec(n, h))
    assert (r.value, r.regime, r.supported) == (value, regime, True)
    assert gp_direct(generate(TubuleneSpec(n, h)), theoretical_orbits(TubuleneSpec(n, h))) == value


def test_closed_form_arithmetic():
    assert Fraction(7, 6) * 16 * 390 == 7280
    assert Fraction(16, 6) * 6 * 306 == 4896


@pytest.mark.parametrize("n, h", [(1, 3), (1, 2), (3, 3), (2, 4), (4, 4), (3, 2)])
def test_closed_form_unsupported(n, h):
    r = closed_form_gp(TubuleneSpec(n, h))
    assert not r.supported and r.value is None and r.regime == "unsupported"


@pytest.mark.parametrize("n, h", [(3, 7), (3, 4), (5, 4), (4, 9), (6, 8), (8, 7), (10, 6)])
def test_closed_form_equals_table_assembly(n, h):
    spec = TubuleneSpec(n, h)
    r = closed_form_gp(spec)
    assert r.supported
    assert r.value == (n + 1) * orbit_wiener_sum_closed(spec)


def test_full_report_zt37():
    r = full_report(TubuleneSpec(3, 7))
    assert r.report.gp_direct == r.report.gp_cut == r.closed.value == 7280
    assert r.report.orbit_wiener_sum == 1820
    assert r.agree


def test_full_report_zt12():
    r = full_report(TubuleneSpec(1, 2))
    assert r.report.gp_direct == r.report.gp_cut
    assert not r.closed.supported
    assert r.agree


def test_full_report_zt23_middle_orbit():
    r = full_report(TubuleneSpec(2, 3))
    assert r.report.gp_direct == r.report.gp_cut
    assert 27 in [w for _, w in r.report.per_orbit]
