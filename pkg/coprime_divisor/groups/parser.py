import re
from typing import NoReturn

from coprime_divisor.errors import GroupSpecSyntaxError, ParameterOutOfBoundsError, SpectrumNotDivisorClosedError

from .permutation import Permutation
from .spec import (
    Alternating,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    PermGroup,
    SpectrumGroup,
    Symmetric,
    missing_divisors,
)

_KEYWORD_PATTERN = re.compile(r'[A-Za-z]+')
_INT_PATTERN = re.compile(r'\d+')
_NAME_PATTERN = re.compile(r'[^\s:]+')


class _GroupSpecParser:
    """Recursive descent parser over the group spec grammar.

    Args:
        text: The spec text.
    """

    _text: str
    _pos: int

    def __init__(self, text: str) -> None:
        self._text = text
        self._pos = 0

    def parse(self) -> GroupSpec:
        spec = self._spec()
        self._skip_ws()
        if self._pos != len(self._text):
            self._fail(f'Unexpected trailing input {self._text[self._pos :]!r}')
        return spec

    def _fail(self, message: str) -> NoReturn:
        raise GroupSpecSyntaxError(message, self._pos)

    def _skip_ws(self) -> None:
        while self._pos < len(self._text) and self._text[self._pos].isspace():
            self._pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self._text[self._pos] if self._pos < len(self._text) else ''

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            self._fail(f'Expected {char!r}')
        self._pos += 1

    def _match(self, pattern: re.Pattern[str], what: str) -> str:
        self._skip_ws()
        match = pattern.match(self._text, self._pos)
        if match is None:
            self._fail(f'Expected {what}')
        self._pos = match.end()
        return match.group(0)

    def _int(self) -> int:
        return int(self._match(_INT_PATTERN, 'an integer'))

    def _spec(self) -> GroupSpec:
        start = self._pos
        keyword = self._match(_KEYWORD_PATTERN, 'a group keyword (Z, D, Q, S, A, DP, PERM, SPEC)')
        handlers = {
            'Z': self._cyclic,
            'D': self._dihedral,
            'Q': self._dicyclic,
            'S': self._symmetric,
            'A': self._alternating,
            'DP': self._direct_product,
            'PERM': self._perm_group,
            'SPEC': self._spectrum_group,
        }
        handler = handlers.get(keyword)
        if handler is None:
            self._pos = start
            self._fail(f'Unknown group keyword {keyword!r}')
        return handler()

    def _cyclic(self) -> GroupSpec:
        n = self._int()
        if n < 1:
            raise ParameterOutOfBoundsError('n', n, 'n >= 1')
        return Cyclic(n=n)

    def _dihedral(self) -> GroupSpec:
        order = self._int()
        if order % 2 or order < 6:
            raise ParameterOutOfBoundsError('m', order, 'an even group order m = 2n with n >= 3')
        return Dihedral(n=order // 2)

    def _dicyclic(self) -> GroupSpec:
        order = self._int()
        if order % 4 or order < 8:
            raise ParameterOutOfBoundsError('m', order, 'a group order m = 4t with t >= 2')
        return Dicyclic(t=order // 4)

    def _symmetric(self) -> GroupSpec:
        n = self._int()
        if n < 1:
            raise ParameterOutOfBoundsError('n', n, 'n >= 1')
        return Symmetric(n=n)

    def _alternating(self) -> GroupSpec:
        n = self._int()
        if n < 1:
            raise ParameterOutOfBoundsError('n', n, 'n >= 1')
        return Alternating(n=n)

    def _direct_product(self) -> GroupSpec:
        self._expect('(')
        left = self._spec()
        self._expect(')')
        self._expect('(')
        right = self._spec()
        self._expect(')')
        return DirectProduct(left=left, right=right)

    def _perm_group(self) -> GroupSpec:
        degree = self._int()
        if degree < 1:
            raise ParameterOutOfBoundsError('k', degree, 'k >= 1')
        generators: list[Permutation] = []
        while self._peek() == ';':
            self._pos += 1
            generators.append(Permutation.from_cycles(degree, self._cycles()))
        return PermGroup(degree=degree, generators=tuple(generators))

    def _cycles(self) -> list[list[int]]:
        cycles: list[list[int]] = []
        while self._peek() == '(':
            checkpoint = self._pos
            self._pos += 1
            cycle: list[int] = []
            while self._peek() not in {')', ''}:
                if not _INT_PATTERN.match(self._text, self._pos):
                    # Not a cycle: the parenthesis closes an enclosing DP argument.
                    self._pos = checkpoint
                    return cycles
                cycle.append(self._int())
            self._expect(')')
            cycles.append(cycle)
        return cycles

    def _spectrum_group(self) -> GroupSpec:
        name = self._match(_NAME_PATTERN, 'a group name')
        self._expect(':')
        orders: list[int] = []
        if self._peek().isdigit():
            orders.append(self._int())
            while self._peek() == ',':
                self._pos += 1
                orders.append(self._int())
        # A literal 1 (identity) is tolerated and dropped.
        pi_e = sorted({m for m in orders if m != 1})
        if 0 in pi_e:
            raise ParameterOutOfBoundsError('m', 0, 'element orders >= 1')
        if missing := missing_divisors(pi_e):
            raise SpectrumNotDivisorClosedError(missing)
        return SpectrumGroup(name=name, pi_e=tuple(pi_e))


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a group spec string.

    Grammar (whitespace separated, parenthesised recursion)::

        Z n | D m | Q m | S n | A n | DP (spec) (spec)
        | PERM k ; cycles ; cycles ... | SPEC name : m1,m2,...

    Args:
        text: The spec text, e.g. ``'DP (Z 4) (S 3)'``.

    Returns:
        The parsed GroupSpec.

    Raises:
        GroupSpecSyntaxError: On a grammar violation, with the failing position.
        ParameterOutOfBoundsError: When a numeric parameter is out of range.
        InvalidPermutationError: When a PERM generator is not a permutation of 1..k.
    """
    return _GroupSpecParser(text).parse()
