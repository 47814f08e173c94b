class FormatError(ValueError):
    """Raised when a polynomial or graph text file cannot be parsed."""

    def __init__(self, message: str, *, line: int, column: int = 1, path: str | None = None):
        self.line = line
        self.column = column
        self.path = path
        self.message = message
        super().__init__(self.location() + message)

    def location(self) -> str:
        prefix = f"{self.path}:" if self.path else ""
        return f"{prefix}{self.line}:{self.column}: "

    def with_path(self, path: str) -> "FormatError":
        return FormatError(self.message, line=self.line, column=self.column, path=path)
