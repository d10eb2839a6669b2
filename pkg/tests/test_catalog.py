"""The shipped objects reproduce every reference table."""

from superbialg import catalog as cat
from superbialg.graded import Tensor2
from superbialg.verify import SECTIONS, run_fixtures

B = cat.sl21_basis()
V = cat.V


def test_full_reproduction_suite_passes():
    results = run_fixtures("all")
    failures = [(r.name, r.detail) for r in results if not r.passed]
    assert not failures, failures


def test_every_section_has_fixtures():
    for sec in SECTIONS:
        assert run_fixtures(sec), f"no fixtures for section {sec}"


def test_delta_f_expanded_entries():
    # hand-expanded values: the wedge of equal odd vectors doubles
    d = cat.delta_f()
    assert d.value(B.index("E11+E33")) == Tensor2(B, B, {(6, 6): -2})
    assert d.value(B.index("E22+E33")) == Tensor2(B, B, {(4, 4): 2})


def test_delta_f_E32_row():
    d = cat.delta_f()
    expected = Tensor2(B, B, {
        (7, 1): -1, (6, 1): -1, (1, 7): 1, (1, 6): 1,
        (2, 4): -1, (4, 2): 1,
    })
    assert d.value(B.index("E32")) == expected


def test_delta_s_rows_vanish_on_diagonal_part():
    d = cat.delta_s()
    assert d.value(B.index("E11+E33")) is None
    assert d.value(B.index("E22+E33")) is None


def test_delta_tables_collection():
    tables = cat.deltas()
    assert set(tables) == {"delta_f", "delta_s", "delta_1", "delta_2",
                           "delta_s1", "delta_s2"}
    assert tables["delta_1"] == -tables["delta_2"]
    assert tables["delta_s1"] == -tables["delta_s2"]


def test_paper_maps_fixture_values():
    maps = cat.paper_maps()
    assert maps["i2"].images[0] == -1 * V("E11+E33")       # h*
    assert maps["is1"].images[3] == V("E32")               # y2
    assert maps["dual_iso_2"].images[3] == -1 * cat.s_basis().vector("y1")


def test_parities_of_sl21():
    assert B.parity(B.index("E23")) == 1
    assert B.parity(B.index("E12")) == 0


def test_graded_dimension_bookkeeping():
    # the ambient splits into two graded copies of either subalgebra
    even = sum(1 for p in cat.SL21_PARITIES if p == 0)
    odd = sum(1 for p in cat.SL21_PARITIES if p == 1)
    assert (even, odd) == (4, 4)
    s_even = sum(1 for p in cat.S_PARITIES if p == 0)
    s_odd = sum(1 for p in cat.S_PARITIES if p == 1)
    assert (even, odd) == (2 * s_even, 2 * s_odd)


def test_f_standard_is_projection_onto_T2():
    fs = cat.f_standard()
    from superbialg.graded import image_basis, span_equal
    assert span_equal(image_basis(fs), cat.t2_span())
    for v in cat.t1_span():
        assert fs(v).is_zero()


def test_s_relations_match_displayed_list():
    g = cat.s_algebra()
    sb = cat.s_basis()
    h, x, y1, y2 = (sb.vector(k) for k in range(4))
    assert g.bracket(h, x) == -1 * x
    assert g.bracket(h, y1) == -1 * y1
    assert g.bracket(x, y2) == y1
    assert g.bracket(y1, y2) == x
    assert g.bracket(y2, y2) == 2 * h
    assert g.bracket(h, y2).is_zero()
    assert g.bracket(x, y1).is_zero()


def test_t_relations_match_displayed_list():
    g = cat.t_algebra()
    sb = cat.s_basis()
    h, x, y1, y2 = (sb.vector(k) for k in range(4))
    assert g.bracket(h, x) == -1 * x
    assert g.bracket(h, y1) == -1 * y1
    assert g.bracket(y1, y2) == x
    assert g.bracket(y2, y2).is_zero()
    assert g.bracket(x, y2).is_zero()
