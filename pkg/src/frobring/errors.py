"""Exception hierarchy."""


class FrobringError(Exception):
    """Base class for all errors raised by frobring."""


class SpecError(FrobringError, ValueError):
    """Malformed ring specification, generator file or order string."""


class ValidationError(FrobringError, ValueError):
    """A ring axiom failed the exhaustive check.

    ``triple`` holds the first offending element indices.
    """

    def __init__(self, axiom, triple, message=None):
        self.axiom = axiom
        self.triple = tuple(int(x) for x in triple)
        super().__init__(message or f"{axiom} fails at {self.triple}")


class OrderError(FrobringError, ValueError):
    pass


class StructureError(FrobringError, ValueError):
    pass


class InternalError(FrobringError, RuntimeError):
    pass


class SizeError(FrobringError, ValueError):
    pass


class NonPrincipalError(FrobringError, ValueError):
    def __init__(self, coordinate, generators, message=None):
        self.coordinate = coordinate
        self.generators = tuple(generators)
        super().__init__(
            message
            or f"coordinate {coordinate}: ideal generated by {self.generators} is not principal"
        )


class FamilyError(FrobringError, ValueError):
    pass


class AssignmentError(FrobringError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class DimensionError(FrobringError, ValueError):
    pass


class PreconditionError(FrobringError, ValueError):
    pass
