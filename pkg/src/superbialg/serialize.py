"""JSON encoding and decoding for every value type.

Scalars travel as decimal strings ("num"/"den") so arbitrary-precision
integers survive; indices are 0-based positions in the basis label list.
Bracket tables list only pairs with i <= j; the i > j half is rebuilt by
super antisymmetry, and diagonal pairs are only accepted for odd vectors.
All round trips are bit-exact.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .graded import Element, GradedBasis, Tensor2, Tensor3
from .algebra import BilinearForm, Superalgebra
from .bialgebra import Bialgebra, ManinTriple
from .cohomology import Cochain
from .double import DoubleAlgebra


class SchemaError(ValueError):
    """The JSON document does not match the expected schema."""


def scalar_to_json(c: Fraction) -> dict:
    return {"num": str(c.numerator), "den": str(c.denominator)}


def scalar_from_json(d) -> Fraction:
    try:
        return Fraction(int(d["num"]), int(d["den"]))
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"bad scalar {d!r}") from e


def basis_to_json(b: GradedBasis) -> dict:
    return {"basis": list(b.labels), "parities": list(b.parities)}


def basis_from_json(d) -> GradedBasis:
    try:
        return GradedBasis(d["basis"], d["parities"])
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"bad basis: {e}") from e


def _entries_to_json(entries: dict) -> list:
    out = []
    for idx in sorted(entries):
        c = entries[idx]
        key = list(idx) if isinstance(idx, tuple) else [idx]
        out.append({"idx": key, **scalar_to_json(c)})
    return out


def element_to_json(e: Element) -> dict:
    return {"basis": list(e.basis.labels),
            "entries": _entries_to_json(e.coeffs)}


def tensor2_to_json(t: Tensor2) -> dict:
    return {"basis": list(t.left.labels),
            "entries": _entries_to_json(t.entries)}


def tensor3_to_json(t: Tensor3) -> dict:
    return {"basis": list(t.bases[0].labels),
            "entries": _entries_to_json(t.entries)}


def _check_labels(d, basis: GradedBasis):
    if list(d.get("basis", [])) != list(basis.labels):
        raise SchemaError("labels do not match the expected basis")


def _read_entries(d, arity: int):
    out = {}
    for ent in d.get("entries", []):
        idx = ent.get("idx")
        if not isinstance(idx, list) or len(idx) != arity:
            raise SchemaError(f"entry index {idx!r} must have {arity} slots")
        out[tuple(int(i) for i in idx)] = scalar_from_json(ent)
    return out


def element_from_json(d, basis: GradedBasis) -> Element:
    _check_labels(d, basis)
    return Element(basis, {i: c for (i,), c in _read_entries(d, 1).items()})


def tensor2_from_json(d, basis: GradedBasis) -> Tensor2:
    _check_labels(d, basis)
    return Tensor2(basis, basis, _read_entries(d, 2))


def tensor3_from_json(d, basis: GradedBasis) -> Tensor3:
    _check_labels(d, basis)
    return Tensor3((basis, basis, basis), _read_entries(d, 3))


# ---------------------------------------------------------------------------
# superalgebras
# ---------------------------------------------------------------------------

def superalgebra_to_json(g: Superalgebra) -> dict:
    pairs: dict[tuple[int, int], list] = {}
    par = g.basis.parity
    for (i, j, k), c in sorted(g.constants.items()):
        if i > j:
            continue  # rebuilt by super antisymmetry
        pairs.setdefault((i, j), []).append({"k": k, **scalar_to_json(c)})
    brackets = [{"i": i, "j": j, "terms": terms}
                for (i, j), terms in sorted(pairs.items())]
    return {**basis_to_json(g.basis), "brackets": brackets}


def superalgebra_from_json(d) -> Superalgebra:
    basis = basis_from_json(d)
    half: dict[tuple[int, int, int], Fraction] = {}
    for ent in d.get("brackets", []):
        try:
            i, j = int(ent["i"]), int(ent["j"])
            terms = ent["terms"]
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f"bad bracket entry {ent!r}") from e
        if i > j:
            raise SchemaError("bracket tables list only pairs with i <= j")
        for term in terms:
            half[(i, j, int(term["k"]))] = scalar_from_json(term)
    try:
        return Superalgebra.from_half_table(basis, half)
    except ValueError as e:
        raise SchemaError(str(e)) from e


# ---------------------------------------------------------------------------
# cochains and bialgebras
# ---------------------------------------------------------------------------

def cochain_to_json(c: Cochain) -> dict:
    values = []
    for args in sorted(c.values):
        v = c.values[args]
        vj = (element_to_json(v) if isinstance(v, Element)
              else tensor2_to_json(v))
        values.append({"args": list(args), "value": vj})
    return {"degree": c.degree, "parity": c.parity, "values": values}


def cochain_from_json(d, g: Superalgebra) -> Cochain:
    try:
        out = Cochain(g, int(d["degree"]), int(d["parity"]))
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError("cochain needs integer degree and parity") from e
    for ent in d.get("values", []):
        args = tuple(int(a) for a in ent["args"])
        vj = ent["value"]
        arity = len(vj["entries"][0]["idx"]) if vj.get("entries") else 2
        if arity == 1:
            out.set_value(args, element_from_json(vj, g.basis))
        else:
            out.set_value(args, tensor2_from_json(vj, g.basis))
    return out


def bialgebra_to_json(b: Bialgebra) -> dict:
    return {"algebra": superalgebra_to_json(b.algebra),
            "delta": cochain_to_json(b.delta)}


def bialgebra_from_json(d, check: bool = True) -> Bialgebra:
    try:
        alg = superalgebra_from_json(d["algebra"])
        delta = cochain_from_json(d["delta"], alg)
    except KeyError as e:
        raise SchemaError(f"bialgebra JSON needs {e} field") from e
    return Bialgebra(alg, delta, check=check)


# ---------------------------------------------------------------------------
# forms, triples and doubles
# ---------------------------------------------------------------------------

def gram_to_json(form: BilinearForm) -> list:
    return [[scalar_to_json(c) for c in row] for row in form.gram]


def gram_from_json(rows, basis: GradedBasis) -> BilinearForm:
    gram = [[scalar_from_json(c) for c in row] for row in rows]
    return BilinearForm(basis, gram)


def manin_to_json(t: ManinTriple) -> dict:
    return {
        "ambient": superalgebra_to_json(t.ambient),
        "plus": [element_to_json(v) for v in t.plus],
        "minus": [element_to_json(v) for v in t.minus],
        "gram": gram_to_json(t.form),
    }


def manin_from_json(d) -> ManinTriple:
    try:
        ambient = superalgebra_from_json(d["ambient"])
        plus = [element_from_json(v, ambient.basis) for v in d["plus"]]
        minus = [element_from_json(v, ambient.basis) for v in d["minus"]]
        form = gram_from_json(d["gram"], ambient.basis)
    except KeyError as e:
        raise SchemaError(f"Manin triple JSON needs {e} field") from e
    return ManinTriple(ambient, form, plus, minus)


def double_to_json(dd: DoubleAlgebra) -> dict:
    return {
        "type": "double",
        "algebra": superalgebra_to_json(dd.underlying),
        "delta": cochain_to_json(dd.delta),
        "gram": gram_to_json(dd.form),
        "canonical_r": tensor2_to_json(dd.canonical_r),
        "primal_dim": dd.primal_dim,
    }


def double_from_json(d) -> DoubleAlgebra:
    if d.get("type") != "double":
        raise SchemaError("expected a document with type = 'double'")
    alg = superalgebra_from_json(d["algebra"])
    return DoubleAlgebra(
        underlying=alg,
        delta=cochain_from_json(d["delta"], alg),
        form=gram_from_json(d["gram"], alg.basis),
        canonical_r=tensor2_from_json(d["canonical_r"], alg.basis),
        primal_dim=int(d["primal_dim"]),
    )


def dump(obj: dict, path: str | None = None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def load_file(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
