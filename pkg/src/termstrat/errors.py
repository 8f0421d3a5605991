"""Exception hierarchy shared by every layer of the library."""


class TermStratError(Exception):
    """Base class for all errors raised by termstrat."""


class ParseError(TermStratError):
    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        if line is not None:
            message = f"{message} at line {line}, column {col}"
        super().__init__(message)


class SignatureError(TermStratError):
    """Malformed or inconsistent signature declaration."""

    def __init__(self, message, name=None):
        self.name = name
        super().__init__(message)


class UnknownConstructor(SignatureError):
    def __init__(self, name, path=None):
        self.path = list(path) if path is not None else None
        msg = f"unknown constructor {name!r}"
        if path is not None:
            msg += f" at path {self.path}"
        super().__init__(msg, name)


class SortError(TermStratError):
    """A term (or a term under construction) is not well-sorted.

    ``path`` is the list of child indices leading from the checked root
    to the offending node.
    """

    def __init__(self, message, path=()):
        self.path = list(path)
        super().__init__(f"{message} at path {self.path}")


class ArityMismatch(SortError):
    def __init__(self, con, expected, got, path=()):
        self.con = con
        self.expected = expected
        self.got = got
        super().__init__(
            f"arity mismatch for {con}: expected {expected} children, got {got}", path
        )


class SortMismatch(SortError):
    def __init__(self, expected, got, path=(), index=None):
        self.expected = expected
        self.got = got
        self.index = index
        super().__init__(f"sort mismatch: expected {expected}, got {got}", path)


class SortViolation(TermStratError):
    """A type-preserving update produced a term of the wrong sort."""

    def __init__(self, tag, got):
        self.tag = tag
        self.got = got
        super().__init__(
            f"sort violation: update for {tag} returned a term of sort {got}"
        )


class UnsupportedEffect(TermStratError):
    """Failure or choice requested under an effect that cannot express it."""


class EffectMismatch(TermStratError):
    """Strategies with different effect kinds were combined."""


class RuleError(TermStratError):
    def __init__(self, message, rule=None):
        self.rule = rule
        if rule is not None:
            message = f"rule {rule}: {message}"
        super().__init__(message)


class StrategyError(TermStratError):
    """Strategy expression failed to elaborate (unknown name, flavor mismatch)."""


class FlavorError(StrategyError):
    pass
