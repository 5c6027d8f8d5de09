"""Exception hierarchy shared by every module of the package."""


class TableauError(Exception):
    """Base class for all errors raised by this package."""


class MissingLetter(TableauError, KeyError):
    def __init__(self, letter):
        super().__init__(letter)
        self.letter = letter

    def __str__(self):
        return f"letter {self.letter!r} is not assigned by the model"


class NotMember(TableauError, ValueError):
    pass


class NotLiteralSet(TableauError, ValueError):
    pass


class NotComposite(TableauError, ValueError):
    pass


class ManualChoiceInvalid(TableauError, ValueError):
    pass


class DomainExceedsLetters(TableauError, ValueError):
    pass


class TooManyLetters(TableauError, ValueError):
    pass


class IncompleteTree(TableauError, ValueError):
    pass


class IncompleteTableau(TableauError, ValueError):
    pass


class BadPath(TableauError, LookupError):
    pass


class FormulaSyntaxError(TableauError, ValueError):
    """Raised by the parser.

    ``position`` is a 0-based character offset into the parsed text;
    ``line`` is 1-based and only set when parsing a problem file.
    """

    def __init__(self, message, position, expected, line=None):
        self.message = message
        self.position = position
        self.expected = expected
        self.line = line
        super().__init__(str(self))

    def __str__(self):
        where = f"column {self.position + 1}"
        if self.line is not None:
            where = f"line {self.line}, {where}"
        return f"{where}: {self.message} (expected {self.expected})"


class MissingSign(TableauError, ValueError):
    def __init__(self, line):
        self.line = line
        super().__init__(f"line {line}: expected 'T:' or 'F:' before the formula")
