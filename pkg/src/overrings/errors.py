class OverringError(Exception):
    """Base class for errors raised by this package."""


class ShapeError(OverringError, ValueError):
    pass


class InvalidModulus(OverringError, ValueError):
    pass


class ResourceExceeded(OverringError, RuntimeError):
    """The Diophantine kernel ran past its step budget.

    Raised instead of returning an answer that might be wrong.
    """

    def __init__(self, budget: int):
        super().__init__(
            f"step budget of {budget} frontier expansions exceeded; "
            "retry with a larger budget or a smaller instance"
        )
        self.budget = budget


class NotRealizable(OverringError, ValueError):
    """Kept and inverted classes do not generate the class group as a monoid."""

    def __init__(self, generator):
        super().__init__(f"canonical generator {generator} is not in the monoid "
                         "generated by the kept and inverted classes")
        self.generator = generator


class InvalidDivisor(OverringError, ValueError):
    pass


class ConfigError(OverringError, ValueError):
    """Malformed config or system file; ``location`` names the offending field."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


class PreconditionError(OverringError, ValueError):
    pass


class ReproductionFailure(OverringError, AssertionError):
    def __init__(self, row: str, detail: str):
        super().__init__(f"{row}: {detail}")
        self.row = row
