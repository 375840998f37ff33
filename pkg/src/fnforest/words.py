"""Letters, words and the word syntax ``x1^-2 x0 x3``."""

from __future__ import annotations

import re
from collections.abc import Iterable
from typing import NamedTuple


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Letter(NamedTuple):
    index: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"x{self.index}" if self.sign > 0 else f"x{self.index}^-1"


Word = tuple[Letter, ...]

_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse whitespace-separated tokens ``x<i>`` or ``x<i>^<k>`` (k nonzero).

    The leftmost token is the leftmost factor of the product.  When ``n`` is
    given, every index must be below it.
    """
    letters: list[Letter] = []
    pos = 0
    size = len(text)
    while True:
        while pos < size and text[pos].isspace():
            pos += 1
        if pos >= size:
            break
        m = _TOKEN.match(text, pos)
        if not m or (m.end() < size and not text[m.end()].isspace()):
            raise WordSyntaxError(f"bad token {text[pos:].split()[0]!r}", pos)
        index = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            raise WordSyntaxError("zero exponent", pos)
        if n is not None and index >= n:
            raise WordSyntaxError(f"generator x{index} is not in the alphabet of F({n})", pos)
        sign = 1 if power > 0 else -1
        letters.extend([Letter(index, sign)] * abs(power))
        pos = m.end()
    return tuple(letters)


def format_word(word: Iterable[Letter]) -> str:
    """Print a word with runs of equal letters collapsed into powers."""
    out = []
    run_letter = None
    run = 0
    for letter in word:
        if letter == run_letter:
            run += 1
            continue
        if run_letter is not None:
            out.append(_token(run_letter, run))
        run_letter, run = letter, 1
    if run_letter is not None:
        out.append(_token(run_letter, run))
    return " ".join(out)


def _token(letter: Letter, run: int) -> str:
    power = letter.sign * run
    return f"x{letter.index}" if power == 1 else f"x{letter.index}^{power}"


def inverse_word(word: Iterable[Letter]) -> Word:
    return tuple(letter.inverse() for letter in reversed(tuple(word)))


def letters(n: int) -> list[Letter]:
    """The 2n letters of F(n), in the order x0, x0^-1, x1, x1^-1, ..."""
    return [Letter(i, s) for i in range(n) for s in (1, -1)]


def rewrite_generator(k: int, n: int) -> Word:
    """A word over x0..x_{n-1} for the generator ``x_k`` of the infinite presentation.

    Uses ``x_{k+n-1} = x0^-1 x_k x0`` for k >= 1.
    """
    if k < n:
        return (Letter(k),)
    inner = rewrite_generator(k - (n - 1), n)
    return (Letter(0, -1),) + inner + (Letter(0),)
