"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


def require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)
