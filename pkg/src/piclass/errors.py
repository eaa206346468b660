"""Exception types raised across the package."""


class PiclassError(Exception):
    pass


class CapExceeded(PiclassError):
    """Closure grew past the enumeration cap."""

    def __init__(self, cap: int):
        super().__init__(f"group closure exceeds enumeration cap {cap}")
        self.cap = cap


class ParseError(PiclassError, ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position


class UnknownName(PiclassError, ValueError):
    pass


class NotASubgroup(PiclassError, ValueError):
    pass


class QNotInPi(PiclassError, ValueError):
    def __init__(self, q: int, pi):
        super().__init__(f"prime {q} is not in {pi}")
        self.q = q
        self.pi = pi


class QNotDividing(PiclassError, ValueError):
    pass


class NotADivisor(PiclassError, ValueError):
    pass


class InternalError(PiclassError, RuntimeError):
    """An algorithm reached a state its invariants rule out."""
