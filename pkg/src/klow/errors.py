"""Exception types shared across the toolkit."""


class KlowError(Exception):
    """Base class for all toolkit errors."""


class AxiomViolation(KlowError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at {witness}")


class NotIrreducible(KlowError):
    pass


class NotUnital(KlowError):
    pass


class RingMismatch(KlowError):
    pass


class NotInvertible(KlowError):
    pass


class BudgetExceeded(KlowError):
    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"estimated work {estimate} exceeds budget {budget}")


class IdentityFailed(KlowError):
    def __init__(self, which, witness):
        self.which = which
        self.witness = witness
        super().__init__(f"identity {which} fails: {witness}")


class LiftMismatch(KlowError):
    pass


class NotInIdeal(KlowError):
    pass


class FieldTooSmall(KlowError):
    pass


class NotFiniteSupport(KlowError):
    pass


class UnitalInput(KlowError):
    pass


class BadInput(KlowError):
    pass
