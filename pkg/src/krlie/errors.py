"""Exception hierarchy shared by all modules."""


class KRError(Exception):
    """Base class for errors raised by krlie."""


class InvalidGroup(KRError, ValueError):
    pass


class OddRankSymplectic(InvalidGroup):
    pass


class UnsupportedFamily(KRError, ValueError):
    pass


class UnsupportedGroup(KRError, ValueError):
    pass


class NonDominant(KRError, ValueError):
    pass


class NonInvariantInput(KRError, ValueError):
    pass


class VirtualInput(KRError, ValueError):
    pass


class UnclassifiableTwisted(KRError):
    pass


class MixedGroup(KRError, ValueError):
    pass


class WrongSpec(KRError, ValueError):
    pass


class NotReal(KRError, ValueError):
    """A class that should be fixed by the involution is not."""


class ParseError(KRError, ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None and text is not None:
            message = f"{message} at position {position}\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class MalformedTable(KRError, ValueError):
    pass
