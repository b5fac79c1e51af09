"""Exception hierarchy shared by all bracelab modules."""

from __future__ import annotations


class BraceLabError(Exception):
    """Base class for every domain error raised by bracelab."""


class ValidationError(BraceLabError):
    """Input tables or maps do not describe the claimed structure."""


class TableShapeError(ValidationError):
    pass


class NotAGroup(ValidationError):
    def __init__(self, table: str, witness: tuple[int, ...], reason: str):
        self.table = table
        self.witness = witness
        self.reason = reason
        super().__init__(f"NotAGroup({table}): {reason} at {_fmt(witness)}")


class NotAbelian(ValidationError):
    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"NotAbelian at (a,b)={_fmt(witness)}")


class BraceAxiomViolated(ValidationError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"BraceAxiomViolated at (a,b,c)={_fmt(witness)}")


class NotBijective(ValidationError):
    def __init__(self, which: str, x: int):
        self.which = which
        self.x = x
        super().__init__(f"NotBijective: {which} map of {x} is not a permutation")


class NotInvolutive(ValidationError):
    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"NotInvolutive at (x,y)={_fmt(witness)}")


class BraidViolated(ValidationError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"BraidViolated at (x,y,z)={_fmt(witness)}")


class QuotientIllDefined(BraceLabError):
    pass


class NotASubbrace(BraceLabError):
    pass


class NotAnIdeal(BraceLabError):
    pass


class OrderCapExceeded(BraceLabError):
    def __init__(self, order: int, cap: int, what: str = "enumeration"):
        self.order = order
        self.cap = cap
        super().__init__(f"OrderCapExceeded: order {order} exceeds {what} cap {cap}")


class ContextMismatch(BraceLabError):
    pass


class ParseError(BraceLabError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"ParseError at line {line}: {reason}")


def _fmt(t: tuple[int, ...]) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"
