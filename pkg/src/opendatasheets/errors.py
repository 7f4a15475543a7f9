"""Exception types shared across the toolkit."""


class DatasheetError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DatasheetError):
    """A datasheet document could not be turned into the typed model.

    Carries the JSON Pointer of the offending location ("" for the
    document root).
    """

    def __init__(self, message: str, pointer: str = ""):
        self.message = message
        self.pointer = pointer
        super().__init__(f'{message} at pointer "{pointer}"')


class JsonSyntaxError(ParseError):
    """Input was not well-formed JSON. Carries line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        ParseError.__init__(self, f"{message} (line {line}, column {column})")


class InvalidSlugError(DatasheetError):
    """A name did not match the lowercase-slug grammar."""


class MergeError(DatasheetError):
    """Inferred resources could not be merged into a datasheet."""


class InferenceError(DatasheetError):
    """A data file could not be profiled. `code` is a stable slug."""

    def __init__(self, message: str, code: str = "inference-error"):
        self.code = code
        super().__init__(message)


class PolicyError(DatasheetError):
    """A policy document is malformed or uses an unknown construct."""
