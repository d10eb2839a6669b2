"""Super cochain complexes with values in g or in g (x) g.

An n-cochain is super alternating: swapping adjacent arguments x, y costs
-(-1)^{|x||y|}.  Values are stored only at canonical argument tuples
(indices nondecreasing, even indices strictly increasing); reading a value
at any other tuple applies the Koszul-signed permutation automatically.

The differential follows the two-sum formula

    df(x_1..x_{n+1}) = sum_i s1(i) x_i . f(..x_i dropped..)
                     + sum_{i<j} s2(i,j) f([x_i,x_j], ..x_i,x_j dropped..)

with

    s1(i)   = (-1)^{i+1} (-1)^{|x_i| (|f| + |x_1| + .. + |x_{i-1}|)}
    s2(i,j) = (-1)^{i+j} (-1)^{|x_i||x_j|}
              (-1)^{|x_i| (|x_1|+..+|x_{i-1}|)} (-1)^{|x_j| (|x_1|+..+|x_{j-1}|)}

(1-based i, j; the j-sum in s2 includes |x_i| since i < j).
"""

from __future__ import annotations

from typing import Mapping

from .graded import (
    EVEN, ODD, BasisMismatch, Element, GradedBasis, Tensor2, as_scalar,
)
from .algebra import Superalgebra, adjoint_on_tensor2, koszul
from .report import VerificationReport


def canonical_tuple(basis: GradedBasis,
                    args: tuple[int, ...]) -> tuple[tuple[int, ...] | None, int]:
    """Sort an argument tuple into canonical order, tracking the sign.

    Returns (sorted tuple, sign); (None, 0) when the tuple has a repeated
    even index, which forces the value 0.
    """
    idx = list(args)
    sign = 1
    # insertion sort; each adjacent swap of (a, b) costs -(-1)^{|a||b|}
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            sign *= -koszul(basis.parity(idx[j - 1]), basis.parity(idx[j]))
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b and basis.parity(a) == EVEN:
            return None, 0
    return tuple(idx), sign


def canonical_tuples(basis: GradedBasis, degree: int) -> list[tuple[int, ...]]:
    """All canonical argument tuples of the given degree."""
    n = len(basis)
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], start: int):
        if len(prefix) == degree:
            out.append(prefix)
            return
        for i in range(start, n):
            # repeated indices only for odd vectors
            if prefix and prefix[-1] == i and basis.parity(i) == EVEN:
                continue
            grow(prefix + (i,), i)
    grow((), 0)
    return out


class Cochain:
    """A super-alternating n-cochain on g with values in g or g (x) g."""

    def __init__(self, g: Superalgebra, degree: int, parity: int,
                 values: Mapping[tuple[int, ...], object] | None = None):
        self.g = g
        self.degree = int(degree)
        self.parity = int(parity)
        self.values: dict[tuple[int, ...], object] = {}
        if values:
            for args, val in values.items():
                self.set_value(tuple(args), val)

    def copy_empty(self, degree: int | None = None) -> "Cochain":
        return Cochain(self.g, self.degree if degree is None else degree,
                       self.parity)

    def set_value(self, args: tuple[int, ...], val):
        """Store a value given at an arbitrary tuple (sign applied)."""
        if len(args) != self.degree:
            raise ValueError("argument count must equal the cochain degree")
        key, sign = canonical_tuple(self.g.basis, args)
        if key is None:
            if not val.is_zero():
                raise ValueError(
                    "value at a tuple with a repeated even argument must be 0")
            return
        signed = val if sign == 1 else val.scale(sign)
        if key in self.values:
            signed = self.values[key] + signed
        if signed.is_zero():
            self.values.pop(key, None)
        else:
            self.values[key] = signed

    def value(self, *args: int):
        """Value at an arbitrary argument tuple, Koszul sign included."""
        if len(args) != self.degree:
            raise ValueError("argument count must equal the cochain degree")
        key, sign = canonical_tuple(self.g.basis, tuple(args))
        if key is None or key not in self.values:
            return None  # caller decides the zero of the right module
        val = self.values[key]
        return val if sign == 1 else val.scale(sign)

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain)
                and self.g.basis == other.g.basis
                and self.degree == other.degree
                and self.parity == other.parity
                and self.values == other.values)

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.g.basis != other.g.basis or self.degree != other.degree
                or self.parity != other.parity):
            raise BasisMismatch("cochain degree/parity/basis mismatch")
        out = self.copy_empty()
        for args, v in self.values.items():
            out.set_value(args, v)
        for args, v in other.values.items():
            out.set_value(args, v)
        return out

    def __neg__(self) -> "Cochain":
        out = self.copy_empty()
        for args, v in self.values.items():
            out.set_value(args, v.scale(-1))
        return out

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, s) -> "Cochain":
        s = as_scalar(s)
        out = self.copy_empty()
        if s != 0:
            for args, v in self.values.items():
                out.set_value(args, v.scale(s))
        return out


def _act(g: Superalgebra, a: Element, val):
    """Module action of a on a value: adjoint on g, Leibniz on g (x) g."""
    if isinstance(val, Element):
        return g.bracket(a, val)
    return adjoint_on_tensor2(g, a, val)


def coboundary_0(g: Superalgebra, r: Tensor2) -> Cochain:
    """d of a homogeneous 0-cochain r in g (x) g.

    For even r this is the plain action a -> [a(x)1 + 1(x)a, r]; for odd r
    the general differential prepends its s1 sign, giving
    a -> (-1)^{|a|} [a(x)1 + 1(x)a, r].  (Every cobracket built from an
    r-matrix is even, so the sign never shows up in those tables; it is
    what keeps d o d = 0 on the odd part of the module.)
    """
    if r.left != g.basis or r.right != g.basis:
        raise BasisMismatch("tensor must live over the algebra's basis")
    p = r.parity()
    if p is None and not r.is_zero():
        raise ValueError("0-cochain must be parity-homogeneous; "
                         "split the tensor into even and odd parts first")
    p = EVEN if p is None else p
    out = Cochain(g, 1, p)
    for a in range(g.dim()):
        val = adjoint_on_tensor2(g, g.basis.vector(a), r)
        if p == ODD and g.basis.parity(a) == ODD:
            val = val.scale(-1)
        if not val.is_zero():
            out.set_value((a,), val)
    return out


def coboundary(g: Superalgebra, f: Cochain) -> Cochain:
    """The (n+1)-cochain df, with the displayed signs s1 and s2."""
    n = f.degree
    par = g.basis.parity
    out = f.copy_empty(n + 1)
    for args in canonical_tuples(g.basis, n + 1):
        ps = [par(a) for a in args]
        prefix = [0] * (n + 2)  # prefix[i] = |x_1| + .. + |x_{i-1}|, 1-based i
        for i in range(1, n + 2):
            prefix[i] = prefix[i - 1] + ps[i - 1]
        total = None

        # first sum: the module action terms
        for i in range(1, n + 2):
            rest = args[:i - 1] + args[i:]
            fv = f.value(*rest)
            if fv is None:
                continue
            s1 = ((-1) ** (i + 1)) * ((-1) ** (ps[i - 1] * (f.parity + prefix[i - 1])))
            term = _act(g, g.basis.vector(args[i - 1]), fv).scale(s1)
            total = term if total is None else total + term

        # second sum: the bracket-insertion terms
        for i in range(1, n + 2):
            for j in range(i + 1, n + 2):
                br = g.bracket_basis(args[i - 1], args[j - 1])
                if br.is_zero():
                    continue
                rest = tuple(a for t, a in enumerate(args, start=1)
                             if t not in (i, j))
                s2 = ((-1) ** (i + j)) * koszul(ps[i - 1], ps[j - 1]) \
                    * ((-1) ** (ps[i - 1] * prefix[i - 1])) \
                    * ((-1) ** (ps[j - 1] * prefix[j - 1]))
                for k, c in br.coeffs.items():
                    fv = f.value(k, *rest)
                    if fv is None:
                        continue
                    term = fv.scale(s2 * c)
                    total = term if total is None else total + term

        if total is not None and not total.is_zero():
            out.set_value(args, total)
    return out


def is_cocycle_1(g: Superalgebra, delta: Cochain) -> VerificationReport:
    """Check a 1-cochain against the super cocycle condition.

    Two independent routes are compared: the pairwise condition

        f([a,b]) = (-1)^{|a||f|} a . f(b) - (-1)^{|b|(|f|+|a|)} b . f(a)

    over all ordered basis pairs, and vanishing of the degree-2 coboundary.
    """
    rep = VerificationReport("1-cocycle")
    if delta.degree != 1:
        rep.add("degree is 1", False, f"degree = {delta.degree}")
        return rep
    lab = g.basis.labels
    par = g.basis.parity
    n = g.dim()
    bad = None
    for a in range(n):
        for b in range(n):
            ea, eb = g.basis.vector(a), g.basis.vector(b)
            br = g.bracket_basis(a, b)
            lhs = None
            for k, c in br.coeffs.items():
                v = delta.value(k)
                if v is None:
                    continue
                term = v.scale(c)
                lhs = term if lhs is None else lhs + term
            fb = delta.value(b)
            fa = delta.value(a)
            rhs = None
            if fb is not None:
                term = _act(g, ea, fb).scale(koszul(par(a), delta.parity))
                rhs = term
            if fa is not None:
                sign = -koszul(par(b), (delta.parity + par(a)) % 2)
                term = _act(g, eb, fa).scale(sign)
                rhs = term if rhs is None else rhs + term
            if lhs is None and rhs is None:
                continue
            l = lhs if lhs is not None else rhs.scale(0)
            r = rhs if rhs is not None else lhs.scale(0)
            if l != r:
                bad = (f"pair ({lab[a]}, {lab[b]}): f([a,b]) = {l} but "
                       f"action side = {r}")
                break
        if bad:
            break
    rep.add("pairwise super cocycle condition", bad is None, bad)

    d2 = coboundary(g, delta)
    rep.add("coboundary vanishes", d2.is_zero(),
            None if d2.is_zero() else
            f"d(delta) has {len(d2.values)} nonzero values")
    return rep
