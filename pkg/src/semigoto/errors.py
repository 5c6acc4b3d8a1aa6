"""Exception hierarchy shared by all modules."""


class SemigroupError(ValueError):
    """Base class for every error raised by semigoto."""


class EmptyError(SemigroupError):
    pass


class GcdError(SemigroupError):
    pass


class NotMemberError(SemigroupError):
    pass


class WholeSemigroupError(SemigroupError):
    pass


class BaseMismatchError(SemigroupError):
    pass


class NotContainedError(SemigroupError):
    pass


class NotAnIdealError(SemigroupError):
    pass


class DecompositionUnavailable(SemigroupError):
    pass


class NotGotoError(SemigroupError):
    pass


class ZeroRankError(SemigroupError):
    pass


class GorensteinError(SemigroupError):
    pass


class NotThreeGeneratedError(SemigroupError):
    pass


class ParamError(SemigroupError):
    pass


class PreconditionError(SemigroupError):
    pass


class ExtensionError(SemigroupError):
    pass
