"""Exception hierarchy. Each family maps to a distinct CLI exit code."""


class BicyclError(Exception):
    exit_code = 10


class FieldError(BicyclError):
    exit_code = 3


class NotPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class FieldDivisionByZero(FieldError, ZeroDivisionError):
    pass


class NotInSpan(FieldError):
    pass


class NoRootInField(FieldError):
    pass


class CodeError(BicyclError):
    exit_code = 4


class ParamMismatch(CodeError):
    pass


class InvalidRoot(CodeError):
    pass


class InvalidEcz(CodeError):
    pass


class ConjugateFirstComponents(InvalidEcz):
    pass


class RankDeficient(CodeError):
    pass


class VerificationFailed(CodeError):
    pass


class OracleDisagreement(CodeError):
    pass


class InputError(BicyclError):
    exit_code = 5


class NonzeroParityInput(InputError):
    pass


class EnumerationCapExceeded(BicyclError):
    exit_code = 6


class CapExceeded(EnumerationCapExceeded):
    pass


class SpecParseError(BicyclError):
    exit_code = 2
