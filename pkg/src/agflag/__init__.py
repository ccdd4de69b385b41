"""Two-point algebraic-geometry codes on Kummer curves y^m = f(x).

Jump sets of code dimensions, Weierstrass semigroups at two points and the
isometry-dual property of code flags, each computed both from closed forms
and from explicit finite-field linear algebra.
"""
from .arith import (CurveParams, EmptyJumpSet, JumpSet, code_dim, ell, gamma_set, gaps_p,
                    gaps_q, h_b, hb_star_closed, hb_star_via_ell, lub_membership, max_hb_star,
                    semigroup_membership)
from .codes import (TwoPointCode, build_code, designed_distance, dual, find_isometry,
                    hb_star_via_rank, min_distance_exhaustive)
from .curve import (AffinePoint, EvaluationSupport, FunctionTerm, KummerCurve, enumerate_points,
                    eval_term, make_curve, rr_basis, standard_support)
from .field import FieldElement, FieldSpec, enumerate_elements, field_arith, kummer_fiber, make_field
from .flags import (FlagReport, flag_indices, hermitian_hb_star, hermitian_isodual,
                    isodual_b_list, isodual_fast, isodual_kummer, verify_flag)
from .matrix import GFMatrix, nullspace, rank, rowspace_equal, rref
from .presets import custom, gen_hermitian, hermitian, norm_trace

__version__ = "0.1.0"
