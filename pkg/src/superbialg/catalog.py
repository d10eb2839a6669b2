"""Concrete objects for the sl(2,1) study and their reference tables.

Everything displayed in the source tables is either an input (the matrix
realization, the map f, the standard r-matrix) or is recomputed here and
compared against the stored table; any mismatch raises FixtureMismatch.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .graded import (
    EVEN, ODD, Q, Element, GradedBasis, LinearEndomorphism, LinearMap,
    Tensor2, tensor, wedge,
)
from .algebra import (
    BilinearForm, MatrixRealization, Superalgebra, from_matrices, gram_matrix,
)
from .bialgebra import (
    Bialgebra, ManinTriple, casimir, cocommutator, dual_basis, r_of_f,
    restrict, solve_f_from_r,
)
from .cohomology import Cochain
from .double import DoubleAlgebra, build_double


class FixtureMismatch(AssertionError):
    """A recomputed object disagrees with its stored reference table."""


# ---------------------------------------------------------------------------
# sl(2,1)
# ---------------------------------------------------------------------------

SL21_LABELS = ("E11+E33", "E22+E33", "E12", "E21", "E13", "E31", "E23", "E32")
SL21_PARITIES = (EVEN, EVEN, EVEN, EVEN, ODD, ODD, ODD, ODD)


def _elementary(i: int, j: int) -> list[list[Fraction]]:
    m = [[Q(0)] * 3 for _ in range(3)]
    m[i - 1][j - 1] = Q(1)
    return m


def _madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


@cache
def sl21_basis() -> GradedBasis:
    return GradedBasis(SL21_LABELS, SL21_PARITIES)


@cache
def sl21_realization() -> MatrixRealization:
    images = [
        _madd(_elementary(1, 1), _elementary(3, 3)),
        _madd(_elementary(2, 2), _elementary(3, 3)),
        _elementary(1, 2),
        _elementary(2, 1),
        _elementary(1, 3),
        _elementary(3, 1),
        _elementary(2, 3),
        _elementary(3, 2),
    ]
    return MatrixRealization(sl21_basis(), 2, 1, images)


@cache
def sl21() -> Superalgebra:
    g = from_matrices(sl21_realization())
    rep = g.validate()
    if not rep.passed:
        raise FixtureMismatch(f"sl(2,1) fails its axioms: {rep.first_failure()}")
    return g


def V(label: str) -> Element:
    """Basis vector of sl(2,1) by label."""
    return sl21_basis().vector(label)


@cache
def supertrace_gram() -> BilinearForm:
    return gram_matrix(sl21_realization())


# ---------------------------------------------------------------------------
# the map f, the invariant tensor, and the two r-matrices
# ---------------------------------------------------------------------------

@cache
def f_map() -> LinearEndomorphism:
    b = sl21_basis()
    images = [
        b.zero(),                    # E11+E33 -> 0
        V("E22+E33"),
        V("E12"),
        b.zero(),                    # E21 -> 0
        V("E13"),
        -1 * V("E13"),               # E31 -> -E13
        b.zero(),                    # E23 -> 0
        V("E23") + V("E32"),         # E32 -> E23 + E32
    ]
    return LinearEndomorphism(b, images)


def _tensor_sum(terms) -> Tensor2:
    out = Tensor2.zero(sl21_basis())
    for a, b in terms:
        out = out + tensor(a, b)
    return out


def _omega_expected() -> Tensor2:
    return _tensor_sum([
        (V("E11+E33"), -1 * V("E22+E33")),
        (-1 * V("E22+E33"), V("E11+E33")),
        (V("E12"), V("E21")),
        (V("E21"), V("E12")),
        (-1 * V("E13"), V("E31")),
        (V("E31"), V("E13")),
        (-1 * V("E23"), V("E32")),
        (V("E32"), V("E23")),
    ])


@cache
def omega() -> Tensor2:
    om = casimir(sl21_realization(), sl21())
    if om != _omega_expected():
        raise FixtureMismatch("invariant tensor differs from its display")
    return om


def _r_f_expected() -> Tensor2:
    return _tensor_sum([
        (-1 * V("E22+E33"), V("E11+E33")),
        (V("E12"), V("E21")),
        (-1 * V("E13"), V("E31")),
        (V("E32"), V("E23")),
        (-1 * V("E13"), V("E13")),
        (V("E23"), V("E23")),
    ])


@cache
def r_f() -> Tensor2:
    r = r_of_f(f_map(), omega())
    if r != _r_f_expected():
        raise FixtureMismatch("r(f) differs from its display")
    return r


@cache
def r_standard() -> Tensor2:
    return _tensor_sum([
        (-1 * V("E22+E33"), V("E11+E33")),
        (V("E12"), V("E21")),
        (-1 * V("E13"), V("E31")),
        (V("E32"), V("E23")),
    ])


@cache
def f_standard() -> LinearEndomorphism:
    """The (undisplayed) map with (f (x) 1) omega = r_standard."""
    return solve_f_from_r(r_standard(), omega())


# ---------------------------------------------------------------------------
# cocommutator tables
# ---------------------------------------------------------------------------

def _wedge_sum(terms) -> Tensor2:
    out = Tensor2.zero(sl21_basis())
    for a, b in terms:
        out = out + wedge(a, b)
    return out


@cache
def delta_f_table() -> dict[str, Tensor2]:
    """The eight displayed values of delta_f, stored in wedge form."""
    z = Tensor2.zero(sl21_basis())
    return {
        "E11+E33": _wedge_sum([(-1 * V("E23"), V("E23"))]),
        "E22+E33": _wedge_sum([(V("E13"), V("E13"))]),
        "E21": _wedge_sum([(V("E21"), V("E11+E33")),
                           (-1 * V("E23"), V("E13") + V("E31"))]),
        "E12": _wedge_sum([(V("E12"), -1 * V("E22+E33")),
                           (V("E13"), V("E23") + V("E32"))]),
        "E23": z,
        "E13": z,
        "E31": _wedge_sum([(V("E13") + V("E31"), V("E11+E33")),
                           (V("E21"), V("E23"))]),
        "E32": _wedge_sum([(V("E23") + V("E32"), -1 * V("E22+E33")),
                           (-1 * V("E12"), V("E13"))]),
    }


@cache
def delta_s_table() -> dict[str, Tensor2]:
    z = Tensor2.zero(sl21_basis())
    return {
        "E11+E33": z,
        "E22+E33": z,
        "E21": _wedge_sum([(V("E21"), V("E11+E33")),
                           (-1 * V("E23"), V("E31"))]),
        "E12": _wedge_sum([(V("E12"), -1 * V("E22+E33")),
                           (V("E13"), V("E32"))]),
        "E23": z,
        "E13": z,
        "E31": _wedge_sum([(V("E31"), V("E11+E33"))]),
        "E32": _wedge_sum([(V("E32"), -1 * V("E22+E33"))]),
    }


def _check_delta_against(delta: Cochain, table: dict[str, Tensor2], tag: str):
    b = sl21_basis()
    for lab, expected in table.items():
        got = delta.value(b.index(lab))
        got = got if got is not None else Tensor2.zero(b)
        if got != expected:
            raise FixtureMismatch(
                f"{tag}({lab}) = {got} differs from the table value {expected}")


@cache
def delta_f() -> Cochain:
    d = cocommutator(sl21(), r_f(), omega())
    _check_delta_against(d, delta_f_table(), "delta_f")
    return d


@cache
def delta_s() -> Cochain:
    d = cocommutator(sl21(), r_standard(), omega())
    _check_delta_against(d, delta_s_table(), "delta_s")
    return d


@cache
def bialgebra_f() -> Bialgebra:
    return Bialgebra(sl21(), delta_f())


@cache
def bialgebra_s() -> Bialgebra:
    return Bialgebra(sl21(), delta_s())


# ---------------------------------------------------------------------------
# the four-dimensional algebras and the distinguished subspaces
# ---------------------------------------------------------------------------

S_LABELS = ("h", "x", "y1", "y2")
S_PARITIES = (EVEN, EVEN, ODD, ODD)


@cache
def s_basis() -> GradedBasis:
    return GradedBasis(S_LABELS, S_PARITIES)


@cache
def s_algebra() -> Superalgebra:
    # [h,x] = -x, [h,y1] = -y1, [x,y2] = y1, [y1,y2] = x, [y2,y2] = 2h
    g = Superalgebra.from_half_table(s_basis(), {
        (0, 1, 1): Q(-1),
        (0, 2, 2): Q(-1),
        (1, 3, 2): Q(1),
        (2, 3, 1): Q(1),
        (3, 3, 0): Q(2),
    })
    rep = g.validate()
    if not rep.passed:
        raise FixtureMismatch(f"s fails its axioms: {rep.first_failure()}")
    return g


@cache
def t_algebra() -> Superalgebra:
    # [h,x] = -x, [h,y1] = -y1, [y1,y2] = x
    g = Superalgebra.from_half_table(s_basis(), {
        (0, 1, 1): Q(-1),
        (0, 2, 2): Q(-1),
        (2, 3, 1): Q(1),
    })
    rep = g.validate()
    if not rep.passed:
        raise FixtureMismatch(f"t fails its axioms: {rep.first_failure()}")
    return g


@cache
def s1_span() -> list[Element]:
    return [V("E11+E33"), V("E21"), V("E23"), V("E13") + V("E31")]


@cache
def s2_span() -> list[Element]:
    return [V("E22+E33"), V("E12"), V("E13"), V("E23") + V("E32")]


@cache
def t1_span() -> list[Element]:
    return [V("E11+E33"), V("E21"), V("E23"), V("E31")]


@cache
def t2_span() -> list[Element]:
    return [V("E22+E33"), V("E12"), V("E13"), V("E32")]


@cache
def s1_embedding() -> LinearMap:
    """s -> sl(2,1) onto S1: h, x, y1, y2 -> E11+E33, E21, E23, E13+E31."""
    return LinearMap(s_basis(), sl21_basis(), s1_span())


@cache
def s2_embedding() -> LinearMap:
    """s -> sl(2,1) onto S2 (also the primal double-identification leg)."""
    return LinearMap(s_basis(), sl21_basis(), s2_span())


@cache
def t1_embedding() -> LinearMap:
    return LinearMap(s_basis(), sl21_basis(), t1_span())


@cache
def t2_embedding() -> LinearMap:
    return LinearMap(s_basis(), sl21_basis(), t2_span())


# ---------------------------------------------------------------------------
# restricted cobrackets delta_1, delta_2, delta_s1, delta_s2
# ---------------------------------------------------------------------------

def _s_wedge_table(table: dict[str, list[tuple]], g: Superalgebra) -> Cochain:
    basis = g.basis
    c = Cochain(g, 1, EVEN)
    for lab, terms in table.items():
        total = Tensor2.zero(basis)
        for coeff, a, b in terms:
            total = total + wedge(basis.vector(a), basis.vector(b)).scale(coeff)
        if not total.is_zero():
            c.set_value((basis.index(lab),), total)
    return c


@cache
def delta_1_table() -> Cochain:
    # delta_1: h -> -y1^y1, x -> x^h - y1^y2, y1 -> 0, y2 -> y2^h + x^y1
    return _s_wedge_table({
        "h": [(-1, "y1", "y1")],
        "x": [(1, "x", "h"), (-1, "y1", "y2")],
        "y2": [(1, "y2", "h"), (1, "x", "y1")],
    }, s_algebra())


@cache
def delta_2_table() -> Cochain:
    return -delta_1_table()


@cache
def delta_s1_table() -> Cochain:
    # delta_s1: x -> x^h - y1^y2, y2 -> y2^h, h and y1 -> 0
    return _s_wedge_table({
        "x": [(1, "x", "h"), (-1, "y1", "y2")],
        "y2": [(1, "y2", "h")],
    }, t_algebra())


@cache
def delta_s2_table() -> Cochain:
    return -delta_s1_table()


def _restricted(bi: Bialgebra, emb: LinearMap,
                target: Superalgebra) -> Bialgebra:
    """Restrict bi to emb's image, re-expressed on the abstract algebra."""
    sub = restrict(bi, emb.images, labels=list(emb.source.labels))
    if sub.algebra.constants != target.constants:
        raise FixtureMismatch(
            "restricted bracket differs from the abstract relations")
    delta = Cochain(target, 1, sub.delta.parity)
    for args, v in sub.delta.values.items():
        delta.set_value(args, Tensor2(target.basis, target.basis,
                                      dict(v.entries)))
    return Bialgebra(target, delta)


@cache
def s_bialgebra_1() -> Bialgebra:
    b = _restricted(bialgebra_f(), s1_embedding(), s_algebra())
    if b.delta != delta_1_table():
        raise FixtureMismatch("delta_1 differs from its table")
    return b


@cache
def s_bialgebra_2() -> Bialgebra:
    b = _restricted(bialgebra_f(), s2_embedding(), s_algebra())
    if b.delta != delta_2_table():
        raise FixtureMismatch("delta_2 differs from its table")
    return b


@cache
def t_bialgebra_1() -> Bialgebra:
    b = _restricted(bialgebra_s(), t1_embedding(), t_algebra())
    if b.delta != delta_s1_table():
        raise FixtureMismatch("delta_s1 differs from its table")
    return b


@cache
def t_bialgebra_2() -> Bialgebra:
    b = _restricted(bialgebra_s(), t2_embedding(), t_algebra())
    if b.delta != delta_s2_table():
        raise FixtureMismatch("delta_s2 differs from its table")
    return b


def deltas() -> dict[str, Cochain]:
    """All six named cobrackets, each recomputed and fixture-checked."""
    return {
        "delta_f": delta_f(),
        "delta_s": delta_s(),
        "delta_1": s_bialgebra_1().delta,
        "delta_2": s_bialgebra_2().delta,
        "delta_s1": t_bialgebra_1().delta,
        "delta_s2": t_bialgebra_2().delta,
    }


# ---------------------------------------------------------------------------
# the displayed maps
# ---------------------------------------------------------------------------

@cache
def dual_s_basis() -> GradedBasis:
    return dual_basis(s_basis())


@cache
def i1_map() -> LinearMap:
    return s2_embedding()


@cache
def i2_map() -> LinearMap:
    """h*, x*, y1*, y2* -> -(E11+E33), E21, -E13-E31, E23 (image S1)."""
    return LinearMap(dual_s_basis(), sl21_basis(), [
        -1 * V("E11+E33"),
        V("E21"),
        -1 * V("E13") + -1 * V("E31"),
        V("E23"),
    ])


@cache
def is1_map() -> LinearMap:
    return t2_embedding()


@cache
def is2_map() -> LinearMap:
    """h*, x*, y1*, y2* -> -(E11+E33), E21, -E31, E23 (image T1)."""
    return LinearMap(dual_s_basis(), sl21_basis(), [
        -1 * V("E11+E33"),
        V("E21"),
        -1 * V("E31"),
        V("E23"),
    ])


def _dual_iso(images: list[tuple[int, str]]) -> LinearMap:
    b = s_basis()
    return LinearMap(dual_s_basis(), b,
                     [b.vector(lab).scale(c) for c, lab in images])


@cache
def dual_iso_1() -> LinearMap:
    """Self-duality of the first restricted structure: h*,x*,y1*,y2* -> h,x,y2,y1."""
    return _dual_iso([(1, "h"), (1, "x"), (1, "y2"), (1, "y1")])


@cache
def dual_iso_2() -> LinearMap:
    """h*, x*, y1*, y2* -> -h, x, y2, -y1."""
    return _dual_iso([(-1, "h"), (1, "x"), (1, "y2"), (-1, "y1")])


@cache
def dual_iso_t1() -> LinearMap:
    return _dual_iso([(1, "h"), (1, "x"), (1, "y2"), (1, "y1")])


@cache
def dual_iso_t2() -> LinearMap:
    return _dual_iso([(-1, "h"), (1, "x"), (1, "y2"), (-1, "y1")])


def negation_map(basis: GradedBasis) -> LinearMap:
    """v -> -v; identifies a bialgebra with the opposite of its mirror."""
    return LinearMap(basis, basis, [basis.vector(i).scale(-1)
                                    for i in range(len(basis))])


def paper_maps() -> dict[str, LinearMap]:
    return {
        "i1": i1_map(), "i2": i2_map(),
        "is1": is1_map(), "is2": is2_map(),
        "dual_iso_1": dual_iso_1(), "dual_iso_2": dual_iso_2(),
        "dual_iso_t1": dual_iso_t1(), "dual_iso_t2": dual_iso_t2(),
    }


# ---------------------------------------------------------------------------
# doubles and their identifications
# ---------------------------------------------------------------------------

@cache
def double_of_s() -> DoubleAlgebra:
    return build_double(s_bialgebra_2())


@cache
def double_of_t() -> DoubleAlgebra:
    return build_double(t_bialgebra_2())


def _combined_identification(d: DoubleAlgebra, primal: LinearMap,
                             dual: LinearMap) -> LinearMap:
    images = list(primal.images) + list(dual.images)
    return LinearMap(d.underlying.basis, primal.target, images)


@cache
def double_s_identification() -> LinearMap:
    return _combined_identification(double_of_s(), i1_map(), i2_map())


@cache
def double_t_identification() -> LinearMap:
    return _combined_identification(double_of_t(), is1_map(), is2_map())


@cache
def manin_triple_s() -> ManinTriple:
    return ManinTriple(sl21(), supertrace_gram(), s2_span(), s1_span())


@cache
def manin_triple_t() -> ManinTriple:
    return ManinTriple(sl21(), supertrace_gram(), t2_span(), t1_span())


# ---------------------------------------------------------------------------
# dual bracket reference tables
# ---------------------------------------------------------------------------

def dual_bracket_table_1() -> dict[tuple[str, str], list[tuple[int, str]]]:
    """Nonzero brackets on the dual of the first restricted structure."""
    return {
        ("h*", "x*"): [(-1, "x*")],
        ("h*", "y2*"): [(-1, "y2*")],
        ("x*", "y1*"): [(1, "y2*")],
        ("y1*", "y2*"): [(1, "x*")],
        ("y1*", "y1*"): [(2, "h*")],
    }


def dual_bracket_table_2() -> dict[tuple[str, str], list[tuple[int, str]]]:
    return {
        ("h*", "x*"): [(1, "x*")],
        ("h*", "y2*"): [(1, "y2*")],
        ("x*", "y1*"): [(-1, "y2*")],
        ("y1*", "y2*"): [(-1, "x*")],
        ("y1*", "y1*"): [(-2, "h*")],
    }


def dual_bracket_table_t1() -> dict[tuple[str, str], list[tuple[int, str]]]:
    return {
        ("h*", "x*"): [(-1, "x*")],
        ("h*", "y2*"): [(-1, "y2*")],
        ("y1*", "y2*"): [(1, "x*")],
    }


def dual_bracket_table_t2() -> dict[tuple[str, str], list[tuple[int, str]]]:
    return {
        ("h*", "x*"): [(1, "x*")],
        ("h*", "y2*"): [(1, "y2*")],
        ("y1*", "y2*"): [(-1, "x*")],
    }


def dual_matches_table(dual: Superalgebra,
                       table: dict[tuple[str, str], list[tuple[int, str]]]) -> bool:
    """Does a computed dual bracket agree with a reference table?

    Pairs absent from the table must bracket to zero; listed pairs must
    match exactly (the table lists each unordered pair once).
    """
    b = dual.basis
    listed = set()
    for (la, lb), terms in table.items():
        expected = b.zero()
        for c, lc in terms:
            expected = expected + b.vector(lc).scale(c)
        got = dual.bracket(b.vector(la), b.vector(lb))
        if got != expected:
            return False
        listed.add((b.index(la), b.index(lb)))
    for i in range(len(b)):
        for j in range(i, len(b)):
            if (i, j) in listed or (j, i) in listed:
                continue
            if not dual.bracket_basis(i, j).is_zero():
                return False
    return True
