"""Exactly uniform sampling of cyclically reduced words of length at most ``l``.

Counting is by exact dynamic programming.  Relative to the first letter
``a`` the last letter written is in one of three classes: ``a`` itself,
``a^-1``, or one of the other ``2m - 2`` letters.  ``completions[k][c]``
counts the ways to append ``k`` more letters, staying reduced and not
ending on ``a^-1``, from class ``c``.
"""

from __future__ import annotations

import random
from functools import lru_cache

from coxco.smallcancel.words import Word

SAME, INVERSE, OTHER = 0, 1, 2


@lru_cache(maxsize=64)
def _completions(m: int, l: int) -> tuple[tuple[int, int, int], ...]:
    others = 2 * m - 2
    table = [(1, 0, 1)]
    for _ in range(l):
        s, i, o = table[-1]
        table.append((
            s + others * o,                 # after a: a or an other letter
            i + others * o,                 # after a^-1: a^-1 or an other letter
            s + i + max(others - 1, 0) * o,  # after some x: a, a^-1, or another non-x^-1
        ))
    return tuple(table)


def count_cyclically_reduced(m: int, length: int) -> int:
    if length < 1:
        return 0
    return 2 * m * _completions(m, length - 1)[length - 1][SAME]


def _pick(rng: random.Random, weights: list[int]) -> int:
    r = rng.randrange(sum(weights))
    for k, w in enumerate(weights):
        if r < w:
            return k
        r -= w
    raise AssertionError("unreachable")


def sample_cyclically_reduced(m: int, l: int, rng: random.Random) -> Word:
    """Uniform over all cyclically reduced words of length ``1..l`` on ``m`` generators."""
    if m < 1 or l < 1:
        raise ValueError("need m >= 1 and l >= 1")
    table = _completions(m, l - 1)
    per_length = [2 * m * table[L - 1][SAME] for L in range(1, l + 1)]
    length = 1 + _pick(rng, per_length)

    letters = [g for k in range(1, m + 1) for g in (k, -k)]
    first = rng.choice(letters)
    out = [first]
    cls = SAME
    for remaining in range(length - 1, 0, -1):
        row = table[remaining - 1]
        last = out[-1]
        # admissible next letters grouped by the class they lead to
        nexts = [x for x in letters if x != -last]
        weights = [row[SAME if x == first else INVERSE if x == -first else OTHER] for x in nexts]
        x = nexts[_pick(rng, weights)]
        out.append(x)
        cls = SAME if x == first else INVERSE if x == -first else OTHER
    assert length == 1 or cls != INVERSE
    return tuple(out)
