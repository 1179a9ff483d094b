from enum import Enum, auto
from typing import Any, Dict, Optional


class ErrorKind(Enum):
    STRUCTURAL = auto()  # 1
    VALIDATION = auto()  # 2
    PARSE = auto()  # 3
    DEGENERATE = auto()  # 4
    VERIFICATION = auto()  # 5
    RANGE = auto()  # 6
    UNSUPPORTED = auto()  # 7


class GitStabError(Exception):
    """Базовая ошибка библиотеки"""

    kind: ErrorKind = ErrorKind.VALIDATION

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        data = {'kind': self.kind.name.lower(), 'message': self.message}
        data.update(self.details)
        return data


class StructuralError(GitStabError):
    """Несовпадение числа переменных или арности"""
    kind = ErrorKind.STRUCTURAL


class ValidationError(GitStabError):
    kind = ErrorKind.VALIDATION


class ParseError(GitStabError):
    """Синтаксическая ошибка во входном тексте"""
    kind = ErrorKind.PARSE

    def __init__(self, message: str, line: int = 1, column: int = 1, **details: Any):
        super().__init__(f"{message} (line {line}, column {column})", line=line, column=column, **details)
        self.line = line
        self.column = column


class DegenerateMapError(GitStabError):
    """Нулевое отображение или вырожденная композиция"""
    kind = ErrorKind.DEGENERATE


class VerificationError(GitStabError):
    kind = ErrorKind.VERIFICATION

    def __init__(self, message: str, certificate: Optional[Any] = None, **details: Any):
        super().__init__(message, **details)
        self.certificate = certificate


class RangeError(GitStabError):
    """Параметры вне допустимого диапазона"""
    kind = ErrorKind.RANGE


class UnsupportedError(GitStabError):
    kind = ErrorKind.UNSUPPORTED
