"""Exception hierarchy shared by every module."""


class TruthsemError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TruthsemError):
    """Problems with user-supplied text or theories (CLI exit code 3)."""


class ParseError(InputError):
    def __init__(self, message, pos=None, expected=(), text=None):
        self.pos = pos
        self.expected = tuple(expected)
        self.text = text
        self.line = self.column = None
        if pos is not None and text is not None:
            self.line = text.count("\n", 0, pos) + 1
            self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        if self.expected:
            message = f"{message}; expected one of: {', '.join(self.expected)}"
        self.reason = message
        where = f"line {self.line}, column {self.column}: " if self.line else ""
        super().__init__(where + message)


class UnknownSymbol(InputError):
    pass


class ArityMismatch(InputError):
    pass


class DuplicateDeclaration(InputError):
    pass


class ReservedSymbol(DuplicateDeclaration):
    """Attempt to declare one of the built-in predicates T, S, F, U, D."""


class UnboundConstant(InputError):
    pass


class NonSentenceNegName(TruthsemError):
    """The negation-name operator was applied to a term naming a non-sentence."""


class ClosureBudgetExceeded(TruthsemError):
    pass


class EnumerationBudgetExceeded(TruthsemError):
    def __init__(self, core_size, budget):
        self.core_size = core_size
        self.budget = budget
        super().__init__(
            f"3^{core_size} hypotheses exceed the enumeration budget "
            f"(at most {budget} core sentences)"
        )


class OutsideClosure(TruthsemError):
    def __init__(self, sentence):
        self.sentence = sentence
        from .syntax import pretty

        super().__init__(f"sentence is not registered in the theory closure: {pretty(sentence)}")


class InternalInvariantViolation(TruthsemError):
    """Raised when a computed object breaks a guaranteed property; indicates a bug."""
