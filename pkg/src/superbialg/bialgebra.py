"""Cobrackets, r-matrices and Manin triples.

The graded pairing used to dualize a cobracket is

    <a* (x) b*, u (x) v> = (-1)^{|b*||u|} a*(u) b*(v)

which, unwound over a basis, gives the dual bracket

    [e_i*, e_j*] = sum_k (-1)^{|e_i||e_j|} delta(e_k)_{ij} e_k*.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .graded import (
    EVEN, Q, BasisMismatch, Element, GradedBasis, LinearEndomorphism,
    LinearMap, Tensor2, Tensor3, alt_s, invert_matrix, matmul, rank,
    solve_exact, super_swap, tensor,
)
from .algebra import (
    BilinearForm, DependentVectors, MatrixRealization, Superalgebra,
    adjoint_on_tensor2, check_invariance, express_in_span, gram_matrix,
    is_subalgebra, koszul,
)
from .cohomology import Cochain, coboundary_0, is_cocycle_1
from .report import VerificationReport


class DegenerateForm(ValueError):
    """The bilinear form needed here is degenerate."""


class NotClosedUnderCobracket(ValueError):
    """delta does not restrict to the requested subspace."""


class InvalidBialgebra(ValueError):
    """The (algebra, delta) pair fails a bialgebra axiom."""


class InhomogeneousInput(ValueError):
    """A homogeneous basis vector was required."""


class Bialgebra:
    """A Lie superalgebra with a compatible cobracket.

    `check=True` verifies skewness, the cocycle condition and coJacobi on
    construction; pass False to skip when the caller already knows.
    """

    def __init__(self, algebra: Superalgebra, delta: Cochain, check: bool = True):
        if delta.g.basis != algebra.basis or delta.degree != 1:
            raise BasisMismatch("delta must be a 1-cochain on the algebra")
        self.algebra = algebra
        self.delta = delta
        if check:
            rep = self.verify()
            if not rep.passed:
                raise InvalidBialgebra(str(rep.first_failure()))

    @property
    def basis(self) -> GradedBasis:
        return self.algebra.basis

    def delta_of(self, i: int) -> Tensor2:
        v = self.delta.value(i)
        return v if v is not None else Tensor2.zero(self.basis)

    def verify(self) -> VerificationReport:
        rep = VerificationReport("bialgebra axioms")
        rep.add("delta is even", self.delta.parity == EVEN)
        skew = all(super_swap(v) == v.scale(-1) for v in self.delta.values.values())
        rep.add("delta values are super-skew", skew)
        rep.merge(is_cocycle_1(self.algebra, self.delta))
        rep.merge(check_cojacobi(self.algebra, self.delta))
        return rep


# ---------------------------------------------------------------------------
# invariant tensors and r-matrices
# ---------------------------------------------------------------------------

def casimir(real: MatrixRealization, g: Superalgebra | None = None) -> Tensor2:
    """The invariant tensor dual to the supertrace form.

    With G the Gram matrix of the form, the result is
    sum_{ij} (G^{-1})_{ij} e_i (x) e_j; invariance under the adjoint action
    is verified before returning.
    """
    form = gram_matrix(real)
    if not form.is_nondegenerate():
        raise DegenerateForm("supertrace form is degenerate")
    inv = invert_matrix(form.gram)
    n = len(real.basis)
    omega = Tensor2(real.basis, real.basis,
                    {(i, j): inv[i][j] for i in range(n) for j in range(n)})
    if g is None:
        from .algebra import from_matrices
        g = from_matrices(real)
    for a in range(n):
        if not adjoint_on_tensor2(g, g.basis.vector(a), omega).is_zero():
            raise ValueError("constructed tensor is not adjoint-invariant")
    return omega


def r_of_f(f: LinearEndomorphism, omega: Tensor2) -> Tensor2:
    """(f (x) 1) omega: apply f to the left tensor leg."""
    if f.basis != omega.left:
        raise BasisMismatch("endomorphism and tensor bases differ")
    out = Tensor2.zero(omega.left)
    for (i, j), c in omega.entries.items():
        out = out + tensor(f.images[i], omega.right.vector(j)).scale(c)
    return out


def solve_f_from_r(r: Tensor2, omega: Tensor2) -> LinearEndomorphism:
    """The unique f with (f (x) 1) omega = r, for invertible omega."""
    n = len(omega.left)
    om = [[omega[(i, j)] for j in range(n)] for i in range(n)]
    rm = [[r[(i, j)] for j in range(n)] for i in range(n)]
    fmat = matmul(rm, invert_matrix(om))
    return LinearEndomorphism.from_matrix(omega.left, fmat)


def check_f_equation(g: Superalgebra, f: LinearEndomorphism) -> VerificationReport:
    """Check (f-1)[f(x), f(y)] = f([(f-1)(x), (f-1)(y)]) over all pairs."""
    rep = VerificationReport("f-equation")
    fm1 = f - LinearEndomorphism.identity(g.basis)
    lab = g.basis.labels
    bad = None
    n = g.dim()
    for i in range(n):
        for j in range(n):
            x, y = g.basis.vector(i), g.basis.vector(j)
            lhs = fm1(g.bracket(f(x), f(y)))
            rhs = f(g.bracket(fm1(x), fm1(y)))
            if lhs != rhs:
                bad = f"pair ({lab[i]}, {lab[j]}): {lhs} != {rhs}"
                break
        if bad:
            break
    rep.add("(f-1)[fx,fy] = f([(f-1)x,(f-1)y])", bad is None, bad)
    return rep


def check_unitarity(r: Tensor2, omega: Tensor2) -> VerificationReport:
    """Check r + T(r) = omega entrywise."""
    rep = VerificationReport("unitarity")
    s = r + super_swap(r)
    ok = s == omega
    detail = None
    if not ok:
        diff = s - omega
        detail = f"r + T(r) - omega = {diff}"
    rep.add("r + T(r) = omega", ok, detail)
    return rep


def cocommutator(g: Superalgebra, r: Tensor2,
                 omega: Tensor2 | None = None) -> Cochain:
    """The cobracket d(r): a -> [a (x) 1 + 1 (x) a, r].

    When omega is supplied and r + T(r) = omega holds, every value is
    checked to be super-skew (a unitary r must produce a skew cobracket).
    """
    delta = coboundary_0(g, r)
    if omega is not None and check_unitarity(r, omega).passed:
        for args, v in delta.values.items():
            if super_swap(v) != v.scale(-1):
                raise ValueError(f"cobracket value at {args} is not super-skew")
    return delta


# ---------------------------------------------------------------------------
# cobracket axioms
# ---------------------------------------------------------------------------

def _delta_otimes_id(g: Superalgebra, delta: Cochain, t: Tensor2) -> Tensor3:
    """Apply delta to the left leg of t; delta is even, so no extra sign."""
    entries: dict[tuple[int, int, int], Fraction] = {}
    for (a, b), c in t.entries.items():
        da = delta.value(a)
        if da is None:
            continue
        for (i, j), d in da.entries.items():
            key = (i, j, b)
            entries[key] = entries.get(key, Q(0)) + c * d
    return Tensor3((g.basis, g.basis, g.basis), entries)


def check_cojacobi(g: Superalgebra, delta: Cochain) -> VerificationReport:
    """Check the coJacobi identity: the signed cyclic sum of
    (delta (x) Id) . delta(x) vanishes for every basis vector x."""
    rep = VerificationReport("coJacobi")
    lab = g.basis.labels
    bad = None
    for a in range(g.dim()):
        da = delta.value(a)
        if da is None:
            continue
        t3 = _delta_otimes_id(g, delta, da)
        s = alt_s(t3)
        if not s.is_zero():
            bad = f"at {lab[a]}: cyclic sum = {s}"
            break
    rep.add("Alt(delta (x) Id) delta = 0", bad is None, bad)
    return rep


def check_compatibility(g: Superalgebra, delta: Cochain) -> VerificationReport:
    """Check delta([a,b]) = [delta(a), b(x)1 + 1(x)b] + [a(x)1 + 1(x)a, delta(b)].

    The right bracket of a homogeneous tensor t with b(x)1 + 1(x)b is
    -(-1)^{|b||t|} times the left action of b on t.
    """
    rep = VerificationReport("cocycle compatibility")
    lab = g.basis.labels
    par = g.basis.parity
    n = g.dim()
    bad = None
    for a in range(n):
        for b in range(n):
            br = g.bracket_basis(a, b)
            lhs = Tensor2.zero(g.basis)
            for k, c in br.coeffs.items():
                v = delta.value(k)
                if v is not None:
                    lhs = lhs + v.scale(c)
            rhs = Tensor2.zero(g.basis)
            da = delta.value(a)
            if da is not None:
                # [delta(a), b(x)1 + 1(x)b]; delta(a) has parity |a|
                act = adjoint_on_tensor2(g, g.basis.vector(b), da)
                rhs = rhs + act.scale(-koszul(par(b), par(a)))
            db = delta.value(b)
            if db is not None:
                rhs = rhs + adjoint_on_tensor2(g, g.basis.vector(a), db)
            if lhs != rhs:
                bad = f"pair ({lab[a]}, {lab[b]}): {lhs} != {rhs}"
                break
        if bad:
            break
    rep.add("delta([a,b]) matches the Leibniz expansion", bad is None, bad)
    return rep


# ---------------------------------------------------------------------------
# duals, restriction, opposites
# ---------------------------------------------------------------------------

def dual_basis(basis: GradedBasis) -> GradedBasis:
    return GradedBasis([lab + "*" for lab in basis.labels], basis.parities)


def dual_bracket(b: Bialgebra) -> Superalgebra:
    """The Lie superalgebra on g* defined by pairing against delta."""
    basis = b.basis
    par = basis.parity
    constants: dict[tuple[int, int, int], Fraction] = {}
    for k in range(len(basis)):
        dk = b.delta.value(k)
        if dk is None:
            continue
        for (i, j), c in dk.entries.items():
            val = koszul(par(i), par(j)) * c
            if val != 0:
                constants[(i, j, k)] = constants.get((i, j, k), Q(0)) + val
    out = Superalgebra(dual_basis(basis), constants)
    rep = out.validate()
    if not rep.passed:
        raise InvalidBialgebra(f"dual bracket is not a Lie superalgebra: "
                               f"{rep.first_failure()}")
    return out


def restrict(b: Bialgebra, sub: Sequence[Element],
             labels: Sequence[str] | None = None) -> Bialgebra:
    """Restrict a bialgebra to a subalgebra spanned by `sub`.

    Every sub vector must be homogeneous and independent; the bracket and
    delta must both close on the span (exact membership, no projection).
    Raises NotClosedUnderCobracket when some delta(s) leaves span (x) span.
    """
    g = b.algebra
    n = g.dim()
    for v in sub:
        if not v.is_homogeneous() or v.is_zero():
            raise InhomogeneousInput(f"sub vector {v} is not homogeneous")
    rows = [[v[k] for k in range(n)] for v in sub]
    if rank(rows) != len(sub):
        raise DependentVectors("restriction needs independent vectors")
    if labels is None:
        labels = [f"v{i}" for i in range(len(sub))]
    sub_basis = GradedBasis(labels, [v.parity() for v in sub])

    constants: dict[tuple[int, int, int], Fraction] = {}
    for i, vi in enumerate(sub):
        for j, vj in enumerate(sub):
            w = g.bracket(vi, vj)
            coeffs = express_in_span(sub, w)
            if coeffs is None:
                raise NotClosedUnderCobracket(
                    f"bracket [{vi}, {vj}] leaves the span")
            for k, c in enumerate(coeffs):
                if c != 0:
                    constants[(i, j, k)] = c
    sub_alg = Superalgebra(sub_basis, constants)

    # membership in span (x) span, solved entrywise and exactly
    pair_cols = []
    pairs = [(a, bb) for a in range(len(sub)) for bb in range(len(sub))]
    for a, bb in pairs:
        t = tensor(sub[a], sub[bb])
        pair_cols.append([t[(i, j)] for i in range(n) for j in range(n)])
    delta_sub = Cochain(sub_alg, 1, b.delta.parity)
    for s_idx, v in enumerate(sub):
        total = Tensor2.zero(g.basis)
        for i, c in v.coeffs.items():
            dv = b.delta.value(i)
            if dv is not None:
                total = total + dv.scale(c)
        target = [total[(i, j)] for i in range(n) for j in range(n)]
        sol = solve_exact(pair_cols, target)
        if sol is None:
            raise NotClosedUnderCobracket(
                f"delta({v}) does not lie in span (x) span")
        entries = {pairs[t_idx]: c for t_idx, c in enumerate(sol) if c != 0}
        if entries:
            delta_sub.set_value((s_idx,), Tensor2(sub_basis, sub_basis, entries))
    return Bialgebra(sub_alg, delta_sub)


def opposite(b: Bialgebra) -> Bialgebra:
    """The opposite bialgebra: bracket negated, cobracket unchanged.

    Negating the bracket is the graded-safe way to reverse it: transposing
    arguments instead would leave odd-odd brackets untouched and does not
    yield the structure dual to -delta.
    """
    neg = Superalgebra(b.basis, {k: -c for k, c in b.algebra.constants.items()})
    delta = Cochain(neg, 1, b.delta.parity,
                    {args: v for args, v in b.delta.values.items()})
    return Bialgebra(neg, delta)


def check_bialgebra_homomorphism(phi: LinearMap, source: Bialgebra,
                                 target: Bialgebra) -> VerificationReport:
    """Bracket homomorphism plus (phi (x) phi) o delta_src = delta_tgt o phi."""
    from .algebra import check_homomorphism
    rep = check_homomorphism(phi, source.algebra, target.algebra)
    bad = None
    for k in range(len(source.basis)):
        sv = source.delta.value(k)
        lhs = (phi.apply_tensor2(sv) if sv is not None
               else Tensor2.zero(target.basis))
        rhs = Tensor2.zero(target.basis)
        for i, c in phi.images[k].coeffs.items():
            tv = target.delta.value(i)
            if tv is not None:
                rhs = rhs + tv.scale(c)
        if lhs != rhs:
            bad = (f"cobracket breaks on {source.basis.labels[k]}: "
                   f"{lhs} != {rhs}")
            break
    rep.add("cobracket preserved", bad is None, bad)
    return rep


# ---------------------------------------------------------------------------
# Manin triples
# ---------------------------------------------------------------------------

class ManinTriple:
    """An ambient algebra with a form and two candidate isotropic halves."""

    def __init__(self, ambient: Superalgebra, form: BilinearForm,
                 plus: Sequence[Element], minus: Sequence[Element]):
        self.ambient = ambient
        self.form = form
        self.plus = list(plus)
        self.minus = list(minus)


def check_manin_triple(t: ManinTriple) -> VerificationReport:
    """Direct sum, subalgebra closure, isotropy, and form axioms."""
    rep = VerificationReport("Manin triple")
    g = t.ambient
    n = g.dim()

    rows = [[v[k] for k in range(n)] for v in t.plus + t.minus]
    direct = (len(t.plus) + len(t.minus) == n and rank(rows) == n)
    rep.add("ambient = plus -o- minus (direct sum)", direct,
            None if direct else
            f"dim plus + dim minus = {len(t.plus) + len(t.minus)}, "
            f"combined rank = {rank(rows)}, dim ambient = {n}")

    for name, part in (("plus", t.plus), ("minus", t.minus)):
        try:
            ok = is_subalgebra(g, part)
        except DependentVectors:
            ok = False
        rep.add(f"{name} is a subalgebra", ok)

    for name, part in (("plus", t.plus), ("minus", t.minus)):
        bad = None
        for a in part:
            for bb in part:
                val = t.form.pair(a, bb)
                if val != 0:
                    bad = f"<{a}, {bb}> = {val}"
                    break
            if bad:
                break
        rep.add(f"{name} is isotropic", bad is None, bad)

    rep.add("form is super-symmetric", t.form.is_supersymmetric())
    rep.add("form is nondegenerate", t.form.is_nondegenerate())
    rep.merge(check_invariance(g, t.form))
    return rep
