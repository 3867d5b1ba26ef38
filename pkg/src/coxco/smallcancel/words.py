"""Free-group words as tuples of signed generator numbers.

Generator ``s_k`` (0-based ``k``) is the letter ``k + 1`` and its inverse is
``-(k + 1)``.  In text, ``a``-``z`` are generators 0-25 and ``A``-``Z`` their
inverses.
"""

from __future__ import annotations

import string
from typing import Iterable

Word = tuple[int, ...]


class EmptyWord(ValueError):
    pass


def word(text: str) -> Word:
    """Parse ``"abAB"``-style text into a word."""
    out = []
    for ch in text:
        if ch in string.ascii_lowercase:
            out.append(ord(ch) - ord("a") + 1)
        elif ch in string.ascii_uppercase:
            out.append(-(ord(ch) - ord("A") + 1))
        else:
            raise ValueError(f"bad letter {ch!r}")
    return tuple(out)


def word_str(w: Iterable[int]) -> str:
    return "".join(chr(ord("a") + x - 1) if x > 0 else chr(ord("A") - x - 1) for x in w)


def inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Iterable[int]) -> Word:
    stack: list[int] = []
    for x in w:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_reduced(w: Word) -> bool:
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1))


def is_cyclically_reduced(w: Word) -> bool:
    return is_reduced(w) and (len(w) < 2 or w[0] != -w[-1])


def cyclic_reduce(w: Word) -> Word:
    """Strip mutually inverse first/last letters of a reduced word."""
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def rotations(w: Word) -> list[Word]:
    return [w[k:] + w[:k] for k in range(len(w))]


def border_length(w: Word) -> int:
    """Length of the longest proper border (prefix that is also a suffix)."""
    fail = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return fail[-1] if w else 0


def is_proper_power(w: Word) -> tuple[Word, int] | None:
    """``(root, k)`` with ``w == root**k`` and ``k >= 2`` maximal, else ``None``."""
    if not w:
        raise EmptyWord("the empty word has no root")
    n = len(w)
    period = n - border_length(w)
    if period < n and n % period == 0:
        return tuple(w[:period]), n // period
    return None


def power_str(root: Word, k: int) -> str:
    return f"({word_str(root)})^{k}"
