"""Exception types shared across the package."""


class WeilresError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleFieldError(WeilresError):
    """Operands live over different coefficient fields or rings."""


class UnsupportedOperationError(WeilresError):
    """The operation needs structure the object does not carry (e.g. a valuation)."""


class EnumerationBoundError(WeilresError):
    """A brute-force enumeration would exceed the configured resource bound."""


class TamenessError(WeilresError):
    """Group order shares a factor with the positive characteristic."""


class DocumentError(WeilresError):
    """A CLI document failed schema validation."""
