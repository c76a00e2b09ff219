"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined for."""


class SearchWindowError(RuntimeError):
    """The r-search exhausted its provably sufficient window.

    This cannot happen for correct inputs; raising instead of continuing
    turns an implementation defect into a loud failure.
    """


class PrecisionError(RuntimeError):
    """A floored real-valued bound changed when recomputed at twice the
    working precision, so its value cannot be trusted."""
