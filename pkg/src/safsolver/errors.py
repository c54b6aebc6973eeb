"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SafError(Exception):
    """Base class for all errors raised by safsolver."""


class ValidationError(SafError, ValueError):
    """A framework violates one of its structural invariants."""


class UnknownArgument(ValidationError, KeyError):
    def __init__(self, name: str, context: str = "") -> None:
        self.name = name
        msg = f"unknown argument {name!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)

    def __str__(self) -> str:  # KeyError would repr() the message
        return self.args[0]


class InvalidName(ValidationError):
    pass


class SubCycle(ValidationError):
    def __init__(self, cycle: list[str]) -> None:
        self.cycle = list(cycle)
        super().__init__("subargument relation has a cycle: " + " -> ".join(self.cycle))


class NonMinimalAttack(ValidationError):
    """``attacker`` attacks both ``target`` and a proper subargument ``sub`` of it."""

    def __init__(self, attacker: str, target: str, sub: str) -> None:
        self.attacker = attacker
        self.target = target
        self.sub = sub
        super().__init__(
            f"attack ({attacker},{target}) is not minimal: "
            f"{attacker} also attacks {sub}, a proper subargument of {target}"
        )


class InstanceTooLarge(SafError):
    def __init__(self, size: int, bound: int, what: str = "subset enumeration") -> None:
        self.size = size
        self.bound = bound
        super().__init__(f"{what} over {size} arguments exceeds the bound of {bound}")


class ParseError(SafError, ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownFactType(ParseError):
    pass


class NotACoreSubset(SafError, ValueError):
    pass


class NotAnExtension(SafError, ValueError):
    pass


class NotAMember(SafError, ValueError):
    pass


class NoJustification(SafError, ValueError):
    pass


class NotFound(SafError, LookupError):
    pass
