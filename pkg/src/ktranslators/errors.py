"""Exception hierarchy shared by the library and the CLI."""


class TranslatorError(Exception):
    """Base class for every error raised by this package."""


class InadmissibleError(TranslatorError, ValueError):
    """Parameters outside the admissible set of a family/exponent case."""


class DomainError(TranslatorError, ValueError):
    """Evaluation point outside an open domain or stencil leaving it."""


class DegenerateError(TranslatorError, ArithmeticError):
    """The causal condition degenerates (metric or normal undefined)."""


class CurvatureError(TranslatorError, ArithmeticError):
    """Gauss curvature K <= 0 where a translator needs K > 0."""


class QuadratureError(TranslatorError, ArithmeticError):
    """Adaptive quadrature missed its tolerance or the integral diverges."""
