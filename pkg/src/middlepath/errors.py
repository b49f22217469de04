"""Exception hierarchy shared by every stage."""


class MiddlePathError(ValueError):
    """Base class for data and parameter errors raised by this package."""


# seqio
class EmptyFile(MiddlePathError):
    pass


class EmptyRecord(MiddlePathError):
    pass


class MissingHeader(MiddlePathError):
    pass


class IllegalResidue(MiddlePathError):
    def __init__(self, record_id: str, position: int, residue: str):
        self.record_id = record_id
        self.position = position
        self.residue = residue
        super().__init__(
            f"illegal residue {residue!r} in record {record_id!r} at position {position}"
        )


class OutOfRange(MiddlePathError):
    pass


# scoring
class MalformedMatrix(MiddlePathError):
    pass


class MissingResidue(MiddlePathError):
    pass


class InvalidParams(MiddlePathError):
    pass


# seeding
class WordTooLong(MiddlePathError):
    pass


# middle path / analytics
class InvalidCutoffs(MiddlePathError):
    pass


class DimensionMismatch(MiddlePathError):
    pass
