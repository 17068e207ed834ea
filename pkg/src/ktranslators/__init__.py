"""Rotational K^alpha-translators in Minkowski 3-space."""

from .errors import (
    CurvatureError,
    DegenerateError,
    DomainError,
    InadmissibleError,
    QuadratureError,
    TranslatorError,
)
from .gluer import GluedCurve, glue, glue_pair
from .golden import golden_closed_form
from .minkowski import CausalClass, MinkVec3, causal_class, lorentz_inner, triple_det
from .profiles import (
    EndpointBehavior,
    Profile,
    QuadOptions,
    endpoint_behavior,
    fprime,
    fsecond,
    h_value,
    integrate_f,
    make_profile,
    maximal_domain,
)
from .surface import (
    Family,
    gauss_curvature_analytic,
    gauss_curvature_fd,
    parametrize,
    speed_vector,
    unit_normal,
)
from .validator import GridSpec, ResidualReport, UserCurve, residual_at, validate_grid

__all__ = [
    "CausalClass", "CurvatureError", "DegenerateError", "DomainError", "EndpointBehavior",
    "Family", "GluedCurve", "GridSpec", "InadmissibleError", "MinkVec3", "Profile",
    "QuadOptions", "QuadratureError", "ResidualReport", "TranslatorError", "UserCurve",
    "causal_class", "endpoint_behavior", "fprime", "fsecond", "gauss_curvature_analytic",
    "gauss_curvature_fd", "glue", "glue_pair", "golden_closed_form", "h_value", "integrate_f",
    "lorentz_inner", "make_profile", "maximal_domain", "parametrize", "residual_at",
    "speed_vector", "triple_det", "unit_normal", "validate_grid",
]
