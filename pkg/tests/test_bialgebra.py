"""r-matrices, cobracket axioms, duals, restriction, opposites, Manin triples."""

from fractions import Fraction as Q

import pytest

from superbialg import catalog as cat
from superbialg.algebra import Superalgebra
from superbialg.bialgebra import (
    Bialgebra, DegenerateForm, ManinTriple, NotClosedUnderCobracket, casimir,
    check_bialgebra_homomorphism, check_cojacobi, check_compatibility,
    check_f_equation, check_manin_triple, check_unitarity, cocommutator,
    dual_bracket, opposite, r_of_f, restrict,
)
from superbialg.cohomology import Cochain
from superbialg.graded import (
    GradedBasis, LinearEndomorphism, Tensor2, tensor, wedge,
)

B = cat.sl21_basis()
V = cat.V
SB = cat.s_basis()


# -- casimir -------------------------------------------------------------------

def test_casimir_has_displayed_diagonal_term():
    om = cat.omega()
    assert om[(0, 1)] == -1  # (E11+E33) (x) -(E22+E33)


def test_casimir_has_displayed_odd_terms():
    om = cat.omega()
    assert om[(4, 5)] == -1 and om[(5, 4)] == 1


def test_casimir_degenerate_form_raises():
    from superbialg.algebra import MatrixRealization
    one = GradedBasis(["z"], [0])
    nilpotent = [[Q(0), Q(1)], [Q(0), Q(0)]]  # squares to zero
    real = MatrixRealization(one, 2, 0, [nilpotent])
    with pytest.raises(DegenerateForm):
        casimir(real)


# -- r(f) ------------------------------------------------------------------------

def test_r_of_f_matches_display():
    r = cat.r_f()
    assert r[(4, 4)] == -1 and r[(6, 6)] == 1  # -E13(x)E13 + E23(x)E23


def test_r_of_identity_is_omega():
    assert r_of_f(LinearEndomorphism.identity(B), cat.omega()) == cat.omega()


def test_solved_standard_map_reproduces_r_s():
    assert r_of_f(cat.f_standard(), cat.omega()) == cat.r_standard()


def test_standard_map_has_no_self_pair_terms():
    r = cat.r_standard()
    assert r[(4, 4)] == 0 and r[(6, 6)] == 0


# -- the functional equation ------------------------------------------------------

def test_f_equation_for_f():
    assert check_f_equation(cat.sl21(), cat.f_map()).passed


def test_f_equation_for_identity_and_zero():
    g = cat.sl21()
    assert check_f_equation(g, LinearEndomorphism.identity(B)).passed
    assert check_f_equation(g, LinearEndomorphism.zero(B)).passed


def test_f_equation_for_standard_map():
    assert check_f_equation(cat.sl21(), cat.f_standard()).passed


# -- unitarity ---------------------------------------------------------------------

def test_unitarity_for_both_r_matrices():
    assert check_unitarity(cat.r_f(), cat.omega()).passed
    assert check_unitarity(cat.r_standard(), cat.omega()).passed


def test_unitarity_half_omega_plus_skew():
    t = wedge(V("E12"), V("E21"))  # a super-skew tensor
    r = cat.omega().scale(Q(1, 2)) + t
    assert check_unitarity(r, cat.omega()).passed


def test_unitarity_fails_off_by_one():
    r = cat.r_f() + tensor(V("E12"), V("E12"))
    rep = check_unitarity(r, cat.omega())
    assert not rep.passed and rep.first_failure().detail


# -- cocommutator tables -----------------------------------------------------------

def test_cocommutator_at_E21():
    d = cocommutator(cat.sl21(), cat.r_f())
    expected = (wedge(V("E21"), V("E11+E33"))
                - wedge(V("E23"), V("E13") + V("E31")))
    assert d.value(B.index("E21")) == expected


def test_cocommutator_vanishes_on_E23_E13():
    d = cocommutator(cat.sl21(), cat.r_f())
    assert d.value(B.index("E23")) is None
    assert d.value(B.index("E13")) is None


def test_standard_cocommutator_at_E31():
    d = cocommutator(cat.sl21(), cat.r_standard())
    assert d.value(B.index("E31")) == wedge(V("E31"), V("E11+E33"))


# -- cobracket axioms ---------------------------------------------------------------

def test_cojacobi_for_delta_f():
    assert check_cojacobi(cat.sl21(), cat.delta_f()).passed


def test_cojacobi_for_zero_cochain():
    assert check_cojacobi(cat.sl21(), Cochain(cat.sl21(), 1, 0)).passed


def test_cojacobi_for_restricted_delta2():
    b = cat.s_bialgebra_2()
    assert check_cojacobi(b.algebra, b.delta).passed


def test_compatibility_for_delta_f():
    assert check_compatibility(cat.sl21(), cat.delta_f()).passed


def test_compatibility_holds_trivially_on_abelian():
    # with a zero bracket both sides vanish for every linear delta
    two = GradedBasis(["a", "b"], [0, 0])
    g = Superalgebra(two, {})
    c = Cochain(g, 1, 0)
    w = Tensor2(two, two, {(0, 1): 1, (1, 0): -1})
    c.set_value((0,), w)
    c.set_value((1,), w)
    assert check_compatibility(g, c).passed


def test_compatibility_fails_for_constant_delta_on_nonabelian():
    g = cat.sl21()
    c = Cochain(g, 1, 0)
    c.set_value((B.index("E12"),), wedge(V("E13"), V("E13")))
    rep = check_compatibility(g, c)
    assert not rep.passed and rep.first_failure().detail


def test_compatibility_zero_cochain():
    assert check_compatibility(cat.sl21(), Cochain(cat.sl21(), 1, 0)).passed


# -- dual brackets -----------------------------------------------------------------

def test_dual_bracket_first_structure():
    d = dual_bracket(cat.s_bialgebra_1())
    assert cat.dual_matches_table(d, cat.dual_bracket_table_1())


def test_dual_bracket_second_structure():
    d = dual_bracket(cat.s_bialgebra_2())
    assert cat.dual_matches_table(d, cat.dual_bracket_table_2())


def test_dual_bracket_of_zero_delta_is_abelian():
    b = Bialgebra(cat.s_algebra(), Cochain(cat.s_algebra(), 1, 0))
    assert dual_bracket(b).constants == {}


def test_dual_iso_maps_are_isomorphisms():
    from superbialg.algebra import check_homomorphism
    pairs = [
        (cat.dual_iso_1(), cat.s_bialgebra_1(), cat.s_algebra()),
        (cat.dual_iso_2(), cat.s_bialgebra_2(), cat.s_algebra()),
        (cat.dual_iso_t1(), cat.t_bialgebra_1(), cat.t_algebra()),
        (cat.dual_iso_t2(), cat.t_bialgebra_2(), cat.t_algebra()),
    ]
    for iso, bial, target in pairs:
        assert iso.is_bijective()
        assert check_homomorphism(iso, dual_bracket(bial), target).passed


# -- restriction -------------------------------------------------------------------

def test_restrict_exotic_to_S1():
    sub = restrict(cat.bialgebra_f(), cat.s1_span(),
                   labels=list(cat.S_LABELS))
    # delta at E13+E31 (named y2 downstairs) matches the displayed line
    got = sub.delta.value(3)
    sb = sub.algebra.basis
    expected = (wedge(sb.vector("y2"), sb.vector("h"))
                + wedge(sb.vector("x"), sb.vector("y1")))
    assert got == expected


def test_restrict_standard_to_T2():
    sub = restrict(cat.bialgebra_s(), cat.t2_span(),
                   labels=list(cat.S_LABELS))
    sb = sub.algebra.basis
    # row E12 (named x downstairs): x ^ -h plus the odd-pair correction
    expected = (wedge(sb.vector("x"), -1 * sb.vector("h"))
                + wedge(sb.vector("y1"), sb.vector("y2")))
    assert sub.delta.value(1) == expected


def test_restrict_standard_to_S1_fails():
    with pytest.raises(NotClosedUnderCobracket):
        restrict(cat.bialgebra_s(), cat.s1_span())


def test_restrict_checks_homogeneity():
    from superbialg.bialgebra import InhomogeneousInput
    with pytest.raises(InhomogeneousInput):
        restrict(cat.bialgebra_f(), [V("E12") + V("E13")])


# -- opposite ----------------------------------------------------------------------

def test_opposite_of_first_is_second():
    rep = check_bialgebra_homomorphism(
        cat.negation_map(SB), cat.s_bialgebra_2(),
        opposite(cat.s_bialgebra_1()))
    assert rep.passed


def test_opposite_is_an_involution():
    b = cat.s_bialgebra_1()
    bb = opposite(opposite(b))
    assert bb.algebra.constants == b.algebra.constants
    assert bb.delta == b.delta


def test_opposite_of_abelian_bracket_is_itself():
    two = GradedBasis(["a", "b"], [0, 1])
    g = Superalgebra(two, {})
    c = Cochain(g, 1, 0)
    c.set_value((0,), Tensor2(two, two, {(1, 1): 2}))
    b = Bialgebra(g, c)
    ob = opposite(b)
    assert ob.algebra.constants == {} and ob.delta == b.delta


# -- Manin triples -----------------------------------------------------------------

def test_manin_triple_for_exotic_split():
    assert check_manin_triple(cat.manin_triple_s()).passed


def test_manin_triple_for_standard_split():
    assert check_manin_triple(cat.manin_triple_t()).passed


def test_manin_triple_fails_without_direct_sum():
    t = ManinTriple(cat.sl21(), cat.supertrace_gram(),
                    cat.s1_span(), cat.s1_span())
    rep = check_manin_triple(t)
    assert not rep.passed
    assert any("direct sum" in c.name for c in rep.failures)
