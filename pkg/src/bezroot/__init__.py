"""Exact real-root counting for polynomials over Q via Bezoutian matrices."""

from .bezout import bezout_matrix, bezout_monomial, bezout_of, reversed_bezout
from .errors import BezrootError
from .exactalg import UniPoly, format_rational, parse_rational, poly_from_json, poly_to_json
from .family import (
    FamilySpec,
    alpha_r,
    build_family,
    p_of_t,
    predict,
    totally_complex_construct,
    verify_prediction,
)
from .inertia import Inertia, charpoly, inertia, inertia_by_charpoly, inertia_by_congruence, signature
from .linalg import Matrix, SymMatrix, det, rank
from .realroots import count_real_roots, isolate_real_roots, strict_upper_rational, sturm_sequence
from .resdisc import bezout_disc_check, disc_in_t, discriminant, resultant, sylvester_matrix
from .structure import (
    bbar_matrix,
    block_signature_D,
    leading_term_h,
    bbar_signature_check,
    phi_charpoly_u,
    sweep_step_check,
)
from .sweep import sweep_harness
from .worked_examples import verify_worked_examples

__version__ = "0.1.0"
