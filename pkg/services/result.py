from dataclasses import dataclass


class ResultError(ValueError):
    """Raised by `Err.unwrap()`; carries the error code."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


@dataclass(frozen=True, slots=True)
class Ok[T]:
    value: T

    @property
    def is_ok(self) -> bool:
        return True

    @property
    def is_err(self) -> bool:
        return False

    def unwrap(self) -> T:
        return self.value

    def unwrap_or[D](self, default: D) -> T:
        return self.value


@dataclass(frozen=True, slots=True)
class Err:
    code: str
    message: str = ""

    @property
    def is_ok(self) -> bool:
        return False

    @property
    def is_err(self) -> bool:
        return True

    def unwrap(self):
        raise ResultError(self.code, self.message)

    def unwrap_or[D](self, default: D) -> D:
        return default


type Result[T] = Ok[T] | Err
