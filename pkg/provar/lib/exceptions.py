class ProvarError(Exception):
    """
    Base class of all errors raised by provar. The class attribute *exit_code* is the process exit status used by the
    command line interface when the error reaches the top level.
    """
    exit_code = 1


class UnknownSymbol(ProvarError, ValueError):
    """
    A character of a word is neither a symbol of the alphabet nor the inverse of one.
    """
    exit_code = 2

    def __init__(self, character: str):
        super().__init__("Unknown symbol '" + character + "'.")
        self.character = character


class AlphabetMismatch(ProvarError, ValueError):
    exit_code = 2


class DimensionMismatch(ProvarError, ValueError):
    exit_code = 2


class NotPrime(ProvarError, ValueError):
    exit_code = 2

    def __init__(self, value: int):
        super().__init__("Expected a prime but got %d." % value)
        self.value = value


class NotASpanningTree(ProvarError, ValueError):
    exit_code = 2


class NotNormal(ProvarError, ValueError):
    exit_code = 2


class ConfigurationError(ProvarError):
    exit_code = 2


class NotAMember(ProvarError, ValueError):
    exit_code = 1


class NotASubgroup(ProvarError, ValueError):
    exit_code = 1


class OrderCapExceeded(ProvarError):
    exit_code = 3

    def __init__(self, order: int, cap: int = 64):
        super().__init__("Group order %d exceeds the supported maximum of %d." % (order, cap))
        self.order = order
        self.cap = cap


class FringeCapExceeded(ProvarError):
    """
    The exhaustive enumeration of an A-fringe would exceed the configured vertex or member bound.
    """
    exit_code = 3

    def __init__(self, cap: int, what: str = "members"):
        super().__init__("Fringe enumeration exceeds the cap of %d %s." % (cap, what))
        self.cap = cap
        self.what = what


class CertificateFailure(ProvarError, AssertionError):
    """
    A certificate checked at runtime failed. This indicates a violated theoretical guarantee and must never be
    ignored.
    """
    exit_code = 4
