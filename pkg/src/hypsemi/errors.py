"""Exception hierarchy.

Every error raised for bad *input* derives from :class:`InvalidInput`; the CLI
maps those to exit code 2.
"""


class HypsemiError(Exception):
    pass


class InvalidInput(HypsemiError, ValueError):
    pass


class ParseError(InvalidInput):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where = f" ({where})"
        super().__init__(message + where)


class NotAssociative(InvalidInput):
    def __init__(self, witness):
        self.witness = tuple(witness)
        i, j, k = self.witness
        super().__init__(f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class IndexOutOfRange(InvalidInput):
    def __init__(self, row, col, value, order):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"entry table[{row}][{col}] = {value!r} is outside 0..{order - 1}")


class ZeroNotAbsorbing(InvalidInput):
    pass


class IdentityNotNeutral(InvalidInput):
    pass


class IrregularSandwich(InvalidInput):
    pass


class NotAGroup(InvalidInput):
    pass


class OrderTooLarge(InvalidInput):
    pass


class NoZero(InvalidInput):
    pass


class NotZeroSimple(InvalidInput):
    pass


class NotUnital(HypsemiError):
    pass


class WrongDimension(InvalidInput):
    pass
