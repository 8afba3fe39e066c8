"""Exception and warning types raised across the package."""


class WeibullEdgesError(ValueError):
    pass


class InvalidParamsError(WeibullEdgesError):
    pass


class NoInteriorModeError(WeibullEdgesError):
    pass


class InvalidGridError(WeibullEdgesError):
    pass


class DegenerateMaskError(WeibullEdgesError):
    pass


class KernelKindError(WeibullEdgesError):
    pass


class SizeError(WeibullEdgesError):
    pass


class KernelSizeError(SizeError):
    pass


class InvalidRuleError(WeibullEdgesError):
    pass


class ParseError(WeibullEdgesError):
    pass


class PgmFormatError(ParseError):
    pass


class UnsupportedFormatError(PgmFormatError):
    pass


class KernelFormatError(ParseError):
    pass


class NonPositiveGridWarning(UserWarning):
    """Some grid coordinates fall outside the density's support and sample to 0."""


class TrailingDataWarning(UserWarning):
    pass
