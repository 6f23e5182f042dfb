class PermscanException(Exception):
    pass


class InvalidArgument(PermscanException, ValueError):
    """Precondition of an operation is violated."""


class TrivialPower(InvalidArgument):
    """0 and 1 are powers of everything; they are never reported as hits."""


class BudgetExceeded(PermscanException):
    def __init__(self, m: int, k: int, required: int, budget: int):
        self.m = m
        self.k = k
        self.required = required
        self.budget = budget
        super().__init__(
            f"root range for m={m}, k={k} holds {required} bases, budget is {budget}. "
            f"Raise the budget or split the range into at least "
            f"{-(-required // budget)} parts."
        )


class CheckpointError(PermscanException):
    def __init__(self, message: str, line: int = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BFileError(PermscanException):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UsageError(PermscanException):
    pass
