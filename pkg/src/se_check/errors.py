class SeCheckError(Exception):
    """Base class for all errors raised by se_check."""


class ParseError(SeCheckError):
    def __init__(self, line: int, column: int, message: str, offset: int = 0):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.offset = offset


class NestedInput(SeCheckError):
    """A rule does not have the non-nested literal shape the engine requires."""


class SignatureTooLarge(SeCheckError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"signature has {size} atoms, exceeding the enumeration cap of {cap}")
        self.size = size
        self.cap = cap


class SchemaMismatch(SeCheckError):
    """Formulas do not instantiate the requested transformation schema."""


class UnsupportedOperator(SeCheckError):
    """Formula uses a connective the engine cannot interpret."""
