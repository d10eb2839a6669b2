"""Exact-arithmetic computations with Lie superbialgebra structures.

The package is organized bottom-up:

* `graded` -- rational sparse elements / tensors over Z/2-graded bases and
  the Koszul-signed operations (tensor, wedge, super swap, signed cycle);
* `algebra` -- Lie superalgebras from structure constants, matrix
  realizations, the supertrace form, axiom and homomorphism checks;
* `cohomology` -- super-alternating cochains and the differential;
* `bialgebra` -- r-matrices, cobrackets, dual brackets, restriction,
  opposites and Manin triples;
* `double` -- structure-constant exchange and the Drinfeld double;
* `catalog` -- the concrete sl(2,1) objects with their reference tables;
* `verify` -- the section-by-section reproduction suite;
* `cli` -- the `superbialg` command.
"""

from .graded import (
    EVEN, ODD, BasisMismatch, Element, GradedBasis, LinearEndomorphism,
    LinearMap, Tensor2, Tensor3, alt_s, apply_endomorphism, image_basis,
    span_equal, super_swap, tensor, wedge,
)
from .report import VerificationReport
from .algebra import (
    BilinearForm, DependentVectors, MatrixRealization, NotClosed,
    Superalgebra, adjoint_on_tensor2, check_homomorphism, check_invariance,
    from_matrices, gram_matrix, is_subalgebra, supertrace_form,
)
from .cohomology import Cochain, coboundary, coboundary_0, is_cocycle_1
from .bialgebra import (
    Bialgebra, DegenerateForm, InvalidBialgebra, ManinTriple,
    NotClosedUnderCobracket, casimir, check_bialgebra_homomorphism,
    check_cojacobi, check_compatibility, check_f_equation,
    check_manin_triple, check_unitarity, cocommutator, dual_bracket,
    opposite, r_of_f, restrict, solve_f_from_r,
)
from .double import (
    DoubleAlgebra, DoubleConstructionError, InconsistentConstants,
    StructureConstants, build_double, check_canonical_r, dual_bialgebra,
    dual_constants, extract_constants, identify,
)

__version__ = "0.1.0"
