"""Words in simple reflections and their associated root sequences.

Composition order, pinned here and everywhere downstream: in any chain
``s_a ... s_b(v)`` the rightmost reflection acts first.  The j-th associated
root of a word (i_1, ..., i_r) is

    beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})      (s_{i_{j-1}} first)

and its coroot is the same chain applied to alpha_{i_j}^vee.  A word is
reduced exactly when every beta_j is positive; for reduced words the beta_j
are pairwise distinct.  The empty word is valid and reduced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError, InvariantViolation
from .rootsys import (
    CorootVec,
    RootSystem,
    RootVec,
    is_positive_root,
    positive_root_count,
    reflect_coroot,
    reflect_root,
    simple_coroot,
    simple_root,
)

Word = tuple[int, ...]


def check_word(rs: RootSystem, letters: Sequence[int]) -> Word:
    """Validate 1-based letters against the rank; returns a plain tuple."""
    word = tuple(letters)
    for pos, i in enumerate(word, start=1):
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise InputError(
                f"letter {i!r} at position {pos} out of range 1..{rs.rank}")
    return word


@dataclass(frozen=True)
class BetaSequence:
    roots: tuple[RootVec, ...]
    coroots: tuple[CorootVec, ...]


@dataclass(frozen=True)
class ReducedCheck:
    reduced: bool
    failing_index: Optional[int]  # first j (1-based) with beta_j negative

    def __bool__(self) -> bool:
        return self.reduced


def betas(rs: RootSystem, letters: Sequence[int]) -> BetaSequence:
    """The roots beta_j and coroots beta_j^vee of a (not necessarily reduced) word."""
    word = check_word(rs, letters)
    roots: list[RootVec] = []
    coroots: list[CorootVec] = []
    for j in range(1, len(word) + 1):
        alpha = simple_root(rs, word[j - 1])
        gamma = simple_coroot(rs, word[j - 1])
        for t in range(j - 1, 0, -1):  # s_{i_{j-1}} acts first, s_{i_1} last
            alpha = reflect_root(rs, word[t - 1], alpha)
            gamma = reflect_coroot(rs, word[t - 1], gamma)
        roots.append(alpha)
        coroots.append(gamma)
    return BetaSequence(tuple(roots), tuple(coroots))


def is_reduced(rs: RootSystem, letters: Sequence[int]) -> ReducedCheck:
    """Reducedness test: the word is reduced iff every beta_j is positive.

    On failure, reports the first failing index as a certificate.  On
    success, additionally asserts the beta_j are pairwise distinct (a
    consequence of reducedness; disagreement is an implementation bug).
    """
    seq = betas(rs, letters)
    for j, beta in enumerate(seq.roots, start=1):
        if not is_positive_root(beta):
            return ReducedCheck(False, j)
    if len(set(seq.roots)) != len(seq.roots):
        raise InvariantViolation("positive beta sequence with repeated roots")
    return ReducedCheck(True, None)


def random_reduced_word(rs: RootSystem, r: int, seed: int) -> Word:
    """Seeded greedy reduced word: extend letter by letter, choosing uniformly
    among letters that keep the next beta positive.

    Valid extensions always exist until the longest element is reached, so
    any r up to the number of positive roots is reachable.
    """
    limit = positive_root_count(rs)
    if r < 0 or r > limit:
        raise InputError(f"no reduced word of length {r}; maximum is {limit}")
    rng = random.Random(seed)
    word: list[int] = []
    for _ in range(r):
        valid = []
        for i in range(1, rs.rank + 1):
            beta = simple_root(rs, i)
            for t in range(len(word), 0, -1):
                beta = reflect_root(rs, word[t - 1], beta)
            if is_positive_root(beta):
                valid.append(i)
        if not valid:
            raise InvariantViolation("greedy extension stuck below the longest element")
        word.append(rng.choice(valid))
    return tuple(word)
