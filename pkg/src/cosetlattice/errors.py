"""Exception hierarchy.  Each class carries a stable ``code`` string."""


class CosetLatticeError(Exception):
    code = "ERROR"


class EnumerationLimitExceeded(CosetLatticeError):
    code = "ENUMERATION_LIMIT_EXCEEDED"


class FaceLimitExceeded(CosetLatticeError):
    code = "FACE_LIMIT_EXCEEDED"


class InvalidPermutation(CosetLatticeError):
    code = "INVALID_PERMUTATION"


class NotAnElement(CosetLatticeError):
    code = "NOT_AN_ELEMENT"


class NotASubgroup(CosetLatticeError):
    code = "NOT_A_SUBGROUP"


class NotBoolean(CosetLatticeError):
    code = "NOT_BOOLEAN"

    def __init__(self, witness):
        super().__init__(f"interval is not Boolean: {witness}")
        self.witness = witness


class NotGroupComplemented(CosetLatticeError):
    code = "NOT_GROUP_COMPLEMENTED"


class NotBounded(CosetLatticeError):
    code = "NOT_BOUNDED"


class NotGraded(CosetLatticeError):
    code = "NOT_GRADED"


class PreconditionFailed(CosetLatticeError):
    code = "PRECONDITION_FAILED"


class ConsistencyError(CosetLatticeError):
    """An identity that must hold between two independent computations failed."""

    code = "CONSISTENCY"


class CatalogError(CosetLatticeError):
    code = "INPUT_ERROR"


class CatalogParseError(CatalogError):
    code = "PARSE_ERROR"

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IntransitiveError(CatalogError):
    code = "INTRANSITIVE"

    def __init__(self, line, orbit):
        super().__init__(f"line {line}: group is not transitive, orbit of 0 is {sorted(orbit)}")
        self.line = line
        self.orbit = orbit


class DuplicateIdError(CatalogError):
    code = "DUPLICATE_ID"
