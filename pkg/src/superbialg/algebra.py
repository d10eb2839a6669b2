"""Lie superalgebras presented by exact structure constants.

A `Superalgebra` stores the full table [e_i, e_j] = sum_k C(i,j,k) e_k.
Matrix realizations act as independent oracles: `from_matrices` re-derives
the constants from graded commutators, `supertrace_form` produces the
invariant bilinear form used for Casimir elements and Manin triples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .graded import (
    EVEN, ODD, Q, BasisMismatch, Element, GradedBasis, LinearMap, Tensor2,
    as_scalar, rank, rref, solve_exact, tensor, _same_basis,
)
from .report import VerificationReport


class NotClosed(ValueError):
    """A family of matrices / vectors is not closed under the bracket."""


class DependentVectors(ValueError):
    """Vectors required to be linearly independent are not."""


def koszul(p: int, q: int) -> int:
    """(-1)^{pq} for parities p, q."""
    return -1 if (p and q) else 1


class Superalgebra:
    """A finite-dimensional Lie superalgebra over the rationals."""

    def __init__(self, basis: GradedBasis,
                 constants: Mapping[tuple[int, int, int], Fraction]):
        self.basis = basis
        self.constants: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), c in constants.items():
            c = as_scalar(c)
            if c != 0:
                self.constants[(i, j, k)] = c
        n = len(basis)
        self._table = [[basis.zero() for _ in range(n)] for _ in range(n)]
        for (i, j, k), c in self.constants.items():
            t = self._table[i][j]
            self._table[i][j] = t + basis.vector(k).scale(c)

    @classmethod
    def from_half_table(cls, basis: GradedBasis,
                        half: Mapping[tuple[int, int, int], Fraction]
                        ) -> "Superalgebra":
        """Build from entries with i <= j; i > j follows by antisymmetry.

        Diagonal entries (i, i) are only accepted for odd e_i.
        """
        constants: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), c in half.items():
            if i > j:
                raise ValueError(f"half table may only list i <= j, got {(i, j)}")
            c = as_scalar(c)
            if c == 0:
                continue
            pi, pj = basis.parity(i), basis.parity(j)
            if i == j:
                if pi == EVEN:
                    raise ValueError(
                        f"[e_{i}, e_{i}] must vanish for even e_{i}")
                constants[(i, i, k)] = constants.get((i, i, k), Q(0)) + c
            else:
                constants[(i, j, k)] = constants.get((i, j, k), Q(0)) + c
                constants[(j, i, k)] = (constants.get((j, i, k), Q(0))
                                        - koszul(pi, pj) * c)
        return cls(basis, constants)

    def bracket_basis(self, i: int, j: int) -> Element:
        return self._table[i][j]

    def bracket(self, x: Element, y: Element) -> Element:
        _same_basis(x.basis, self.basis)
        _same_basis(y.basis, self.basis)
        out = self.basis.zero()
        for i, cx in x.coeffs.items():
            for j, cy in y.coeffs.items():
                out = out + self._table[i][j].scale(cx * cy)
        return out

    def dim(self) -> int:
        return len(self.basis)

    # -- axioms ------------------------------------------------------------

    def validate(self) -> VerificationReport:
        """Check grading consistency, super antisymmetry and super Jacobi.

        Exhaustive over all basis pairs / triples; the first counterexample
        of each axiom is recorded in the report.
        """
        rep = VerificationReport("superalgebra axioms")
        par = self.basis.parity
        lab = self.basis.labels
        n = self.dim()

        bad = None
        for (i, j, k), c in self.constants.items():
            if par(k) != (par(i) + par(j)) % 2:
                bad = f"C({lab[i]},{lab[j]} -> {lab[k]}) = {c} breaks the grading"
                break
        rep.add("grading consistency", bad is None, bad)

        bad = None
        for i in range(n):
            for j in range(n):
                lhs = self._table[j][i]
                rhs = self._table[i][j].scale(-koszul(par(i), par(j)))
                if lhs != rhs:
                    bad = f"[{lab[j]},{lab[i]}] = {lhs} but sign rule wants {rhs}"
                    break
            if bad:
                break
        rep.add("super antisymmetry", bad is None, bad)

        # even self-brackets must vanish (odd ones may not)
        bad = None
        for i in range(n):
            if par(i) == EVEN and not self._table[i][i].is_zero():
                bad = f"[{lab[i]},{lab[i]}] = {self._table[i][i]} != 0"
                break
        rep.add("even self-brackets vanish", bad is None, bad)

        bad = None
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    ea, eb, ec = (self.basis.vector(a), self.basis.vector(b),
                                  self.basis.vector(c))
                    s = (self.bracket(ea, self.bracket(eb, ec))
                         .scale(koszul(par(a), par(c)))
                         + self.bracket(eb, self.bracket(ec, ea))
                         .scale(koszul(par(b), par(a)))
                         + self.bracket(ec, self.bracket(ea, eb))
                         .scale(koszul(par(c), par(b))))
                    if not s.is_zero():
                        bad = (f"Jacobi fails on ({lab[a]},{lab[b]},{lab[c]}):"
                               f" cyclic sum = {s}")
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("super Jacobi", bad is None, bad)
        return rep

    def derived_subalgebra_rows(self) -> list[list[Fraction]]:
        n = self.dim()
        rows = []
        for i in range(n):
            for j in range(n):
                e = self._table[i][j]
                if not e.is_zero():
                    rows.append([e[k] for k in range(n)])
        return rows

    def is_solvable(self, max_steps: int = 10) -> bool:
        """Does the derived series reach zero?"""
        current = [self.basis.vector(i) for i in range(self.dim())]
        for _ in range(max_steps):
            brackets = []
            for a in current:
                for b in current:
                    v = self.bracket(a, b)
                    if not v.is_zero():
                        brackets.append(v)
            if not brackets:
                return True
            n = self.dim()
            red, _ = rref([[v[k] for k in range(n)] for v in brackets])
            new = [Element(self.basis, {k: r[k] for k in range(n)}) for r in red]
            if len(new) == len(current):  # series stabilized above zero
                return False
            current = new
        return False


# ---------------------------------------------------------------------------
# matrix realizations
# ---------------------------------------------------------------------------

Matrix = list[list[Fraction]]


def zeros(m: int, n: int) -> Matrix:
    return [[Q(0)] * n for _ in range(m)]


class MatrixRealization:
    """Images of the basis vectors as (m+n) x (m+n) block-graded matrices.

    Even vectors must be block diagonal, odd vectors block off-diagonal,
    relative to the (m|n) splitting.
    """

    def __init__(self, basis: GradedBasis, m: int, n: int,
                 images: Sequence[Matrix]):
        if len(images) != len(basis):
            raise ValueError("need one matrix per basis vector")
        self.basis = basis
        self.m = m
        self.n = n
        self.images = [[[as_scalar(x) for x in row] for row in mat]
                       for mat in images]
        d = m + n
        for idx, mat in enumerate(self.images):
            if len(mat) != d or any(len(r) != d for r in mat):
                raise ValueError("matrix size must be (m+n) x (m+n)")
            p = basis.parity(idx)
            for r in range(d):
                for c in range(d):
                    block_odd = (r < m) != (c < m)
                    if mat[r][c] != 0 and block_odd != (p == ODD):
                        raise ValueError(
                            f"matrix for {basis.labels[idx]} violates the "
                            f"(m|n) block grading at entry {(r, c)}")

    def matrix_parity(self, mat: Matrix) -> int | None:
        d = self.m + self.n
        ps = set()
        for r in range(d):
            for c in range(d):
                if mat[r][c] != 0:
                    ps.add((r < self.m) != (c < self.m))
        if len(ps) != 1:
            return None
        return ODD if ps.pop() else EVEN

    def image_of(self, x: Element) -> Matrix:
        _same_basis(x.basis, self.basis)
        d = self.m + self.n
        out = zeros(d, d)
        for i, c in x.coeffs.items():
            for r in range(d):
                for s in range(d):
                    out[r][s] += c * self.images[i][r][s]
        return out

    def graded_commutator(self, a: Matrix, b: Matrix) -> Matrix:
        """AB - (-1)^{|A||B|} BA for homogeneous block matrices."""
        pa, pb = self.matrix_parity(a), self.matrix_parity(b)
        if pa is None or pb is None:
            raise ValueError("graded commutator needs homogeneous matrices")
        d = self.m + self.n
        sign = koszul(pa, pb)
        out = zeros(d, d)
        for r in range(d):
            for s in range(d):
                acc = Q(0)
                for t in range(d):
                    acc += a[r][t] * b[t][s] - sign * b[r][t] * a[t][s]
                out[r][s] = acc
        return out

    def supertrace(self, mat: Matrix) -> Fraction:
        """tr of the even block minus tr of the odd block."""
        d = self.m + self.n
        return (sum((mat[i][i] for i in range(self.m)), Q(0))
                - sum((mat[i][i] for i in range(self.m, d)), Q(0)))


def supertrace_form(real: MatrixRealization, x: Element, y: Element) -> Fraction:
    """str(rho(x) rho(y)) relative to the (m|n) block grading."""
    a = real.image_of(x)
    b = real.image_of(y)
    d = real.m + real.n
    prod = zeros(d, d)
    for r in range(d):
        for s in range(d):
            prod[r][s] = sum((a[r][t] * b[t][s] for t in range(d)), Q(0))
    return real.supertrace(prod)


def from_matrices(real: MatrixRealization) -> Superalgebra:
    """Derive abstract structure constants from a faithful realization.

    Raises DependentVectors if the images are linearly dependent, NotClosed
    if some graded commutator leaves their span.
    """
    d = real.m + real.n
    flat = [[mat[r][c] for r in range(d) for c in range(d)]
            for mat in real.images]
    columns = [list(col) for col in flat]
    if all(all(x == 0 for x in col) for col in columns):
        # an all-zero realization still pins down the abelian algebra
        return Superalgebra(real.basis, {})
    if rank(columns) != len(real.images):
        raise DependentVectors("matrix images are linearly dependent")
    constants: dict[tuple[int, int, int], Fraction] = {}
    nb = len(real.basis)
    for i in range(nb):
        for j in range(nb):
            br = real.graded_commutator(real.images[i], real.images[j])
            target = [br[r][c] for r in range(d) for c in range(d)]
            coeffs = solve_exact(columns, target)
            if coeffs is None:
                raise NotClosed(
                    f"[{real.basis.labels[i]}, {real.basis.labels[j]}] is not "
                    f"in the span of the images")
            for k, c in enumerate(coeffs):
                if c != 0:
                    constants[(i, j, k)] = c
    return Superalgebra(real.basis, constants)


# ---------------------------------------------------------------------------
# bilinear forms
# ---------------------------------------------------------------------------

class BilinearForm:
    """A bilinear form on a graded space, stored as a dense Gram matrix."""

    def __init__(self, basis: GradedBasis, gram: Matrix):
        n = len(basis)
        if len(gram) != n or any(len(r) != n for r in gram):
            raise ValueError("gram matrix must be square over the basis")
        self.basis = basis
        self.gram = [[as_scalar(x) for x in row] for row in gram]

    def pair(self, x: Element, y: Element) -> Fraction:
        _same_basis(x.basis, self.basis)
        _same_basis(y.basis, self.basis)
        acc = Q(0)
        for i, cx in x.coeffs.items():
            for j, cy in y.coeffs.items():
                acc += cx * self.gram[i][j] * cy
        return acc

    def is_supersymmetric(self) -> bool:
        n = len(self.basis)
        par = self.basis.parity
        return all(self.gram[i][j] == koszul(par(i), par(j)) * self.gram[j][i]
                   for i in range(n) for j in range(n))

    def is_nondegenerate(self) -> bool:
        return rank(self.gram) == len(self.basis)


def gram_matrix(real: MatrixRealization) -> BilinearForm:
    """Gram matrix of the supertrace form in the realization's basis."""
    n = len(real.basis)
    vecs = real.basis.vectors()
    gram = [[supertrace_form(real, vecs[i], vecs[j]) for j in range(n)]
            for i in range(n)]
    return BilinearForm(real.basis, gram)


# ---------------------------------------------------------------------------
# actions and structural checks
# ---------------------------------------------------------------------------

def adjoint_on_tensor2(g: Superalgebra, a: Element, t: Tensor2) -> Tensor2:
    """Signed Leibniz action of a on a rank-2 tensor.

    For homogeneous a:  a . (u (x) v) = [a,u] (x) v + (-1)^{|a||u|} u (x) [a,v];
    mixed a acts part by part.
    """
    _same_basis(t.left, g.basis)
    _same_basis(t.right, g.basis)
    out = Tensor2.zero(g.basis)
    par = g.basis.parity
    for pa, ah in a.homogeneous_parts().items():
        for (i, j), c in t.entries.items():
            left = g.bracket(ah, g.basis.vector(i))
            right = g.bracket(ah, g.basis.vector(j))
            out = out + tensor(left, g.basis.vector(j)).scale(c)
            out = out + tensor(g.basis.vector(i), right).scale(
                c * koszul(pa, par(i)))
    return out


def express_in_span(vectors: Sequence[Element], w: Element) -> list[Fraction] | None:
    """Coefficients of w in the given vectors, or None if w is outside."""
    n = len(w.basis)
    cols = [[v[k] for k in range(n)] for v in vectors]
    return solve_exact(cols, [w[k] for k in range(n)])


def is_subalgebra(g: Superalgebra, vectors: Sequence[Element]) -> bool:
    """Is the span of the (independent) vectors closed under the bracket?"""
    n = g.dim()
    rows = [[v[k] for k in range(n)] for v in vectors]
    if rank(rows) != len(vectors):
        raise DependentVectors("subalgebra test needs independent vectors")
    for a in vectors:
        for b in vectors:
            if express_in_span(vectors, g.bracket(a, b)) is None:
                return False
    return True


def check_invariance(g: Superalgebra, form: BilinearForm) -> VerificationReport:
    """Check <[a,b],c> = <a,[b,c]> over all basis triples."""
    rep = VerificationReport("form invariance")
    lab = g.basis.labels
    n = g.dim()
    bad = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ei, ej, ek = (g.basis.vector(i), g.basis.vector(j),
                              g.basis.vector(k))
                lhs = form.pair(g.bracket(ei, ej), ek)
                rhs = form.pair(ei, g.bracket(ej, ek))
                if lhs != rhs:
                    bad = (f"<[{lab[i]},{lab[j]}],{lab[k]}> = {lhs} but "
                           f"<{lab[i]},[{lab[j]},{lab[k]}]> = {rhs}")
                    break
            if bad:
                break
        if bad:
            break
    rep.add("invariance <[a,b],c> = <a,[b,c]>", bad is None, bad)
    return rep


def check_homomorphism(phi: LinearMap, source: Superalgebra,
                       target: Superalgebra) -> VerificationReport:
    """Check phi([a,b]) = [phi(a), phi(b)] on all pairs, plus parity."""
    if phi.source != source.basis or phi.target != target.basis:
        raise BasisMismatch("map does not connect the two algebras")
    rep = VerificationReport("bracket homomorphism")
    rep.add("parity preserving", phi.is_parity_preserving())
    lab = source.basis.labels
    bad = None
    n = source.dim()
    for i in range(n):
        for j in range(n):
            lhs = phi(source.bracket_basis(i, j))
            rhs = target.bracket(phi.images[i], phi.images[j])
            if lhs != rhs:
                bad = (f"phi[{lab[i]},{lab[j]}] = {lhs} but "
                       f"[phi {lab[i]}, phi {lab[j]}] = {rhs}")
                break
        if bad:
            break
    rep.add("bracket preserved", bad is None, bad)
    return rep
