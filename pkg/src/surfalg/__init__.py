"""surfalg: exact curvature and implicitization toolkit for TF-type surfaces.

Exact rational polynomial arithmetic, radical-graded surface geometry
(fundamental forms, both Laplace-Beltrami images, tangential coordinates),
and two independent implicitization engines (Buchberger elimination and
certified multi-modular interpolation), with an adjudication suite for the
bundled reference results.
"""

from .mpoly import MPoly, PolynomialError, poly_gcd, poly_lcm, squarefree_split
from .ratfun import RatFun
from .radexpr import BaseMismatchError, GradeOverflowError, RadExpr
from .linalg import RationalMatrix, rational_kernel, rational_reconstruct
from .groebner import BudgetExceededError, buchberger, groebner_eliminate
from .surface import (ConeThroughOriginError, DegeneratePatchError,
                      FlatSurfaceError, FundamentalForms, SurfacePatch,
                      TangentPlaneData, ThirdFormCombos, UnsupportedPatchError,
                      first_fundamental_form, fundamental_forms,
                      gaussian_curvature, laplace_beltrami_one,
                      laplace_beltrami_three, mean_curvature, normal_field,
                      second_fundamental_form, tangent_plane, third_form_combos)
from .tfsurface import (AnalyticTFPatch, FamilyConstraintError, GridSpec,
                        ScalarFunction, SolutionFamily, TFSpec,
                        constantK_constraint_residual, cos_scalar,
                        gauss_condition_residual, gauss_numerator, make_family,
                        make_tf_patch, minimality_numerator,
                        minimality_residual, power_scalar, tan_scalar,
                        w_polynomial)
from .implicit import (ClassResult, EliminationConfig, ImplicitNotFoundError,
                       ImplicitSurface, ParametricMap3, SamplingDegenerateError,
                       canonical_implicit, class_of, compose_numerator_zero,
                       degree_of, implicitize, implicitize_groebner,
                       implicitize_interpolation)
from .verify import (VerificationReport, finite_difference_check, full_suite,
                     lb_identity_check, numeric_grid_residual,
                     printed_result_comparison, substitution_check)

__version__ = "0.1.0"
