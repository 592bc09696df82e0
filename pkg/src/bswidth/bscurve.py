"""Torus-stable curves on an iterated projective-line bundle over a reduced
word: intersection degrees, symplectic areas, minimal curves, lines, and the
Gromov width.

For a reduced word (i_1, ..., i_r) with positive coefficients m_1, ..., m_r,
the j-th curve meets the k-th line bundle in

    deg[k][j] = 0                                          for  j > k,
    deg[k][j] = <varpi_{i_k}, s_{i_k} ... s_{i_{j+1}}(alpha_{i_j}^vee)>
                                                           for  j <= k,

(the chain is empty when j = k, rightmost reflection first as always), the
area of the j-th curve is ell_j = sum_k m_k deg[k][j], the anticanonical
degree is 1 + height of s_{i_r} ... s_{i_{j+1}}(alpha_{i_j}^vee), the j-th
curve is minimal iff s_{i_r} ... s_{i_{j+1}}(alpha_{i_j}) is a simple root,
and a line iff deg[k][j] = 0 for all k > j.  The Gromov width is
min_j ell_j, which provably equals the minimum over minimal curves alone;
the report computes both minima and hard-fails if they ever disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InvariantViolation
from .rootsys import (
    RootSystem,
    RootVec,
    coroot_height,
    is_simple_root,
    reflect_coroot,
    reflect_root,
    simple_coroot,
    simple_root,
)
from .words import Word, check_word, is_reduced


@dataclass(frozen=True)
class BSInput:
    """A reduced word plus positive rational bundle coefficients."""

    rs: RootSystem
    word: Word
    m: tuple[Fraction, ...]

    def __post_init__(self):
        word = check_word(self.rs, self.word)
        object.__setattr__(self, "word", word)
        if any(isinstance(x, float) for x in self.m):
            raise InputError("coefficients must be exact rationals, not floats")
        m = tuple(Fraction(x) for x in self.m)
        object.__setattr__(self, "m", m)
        if len(m) != len(word):
            raise InputError(
                f"{len(m)} coefficients for a word of length {len(word)}")
        check = is_reduced(self.rs, word)
        if not check:
            raise InputError(f"word not reduced at position {check.failing_index}")
        for j, mj in enumerate(m, start=1):
            if mj <= 0:
                raise InputError(f"coefficient m_{j} = {mj} is not positive")

    @property
    def r(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class CurveReport:
    deg: tuple[tuple[int, ...], ...]      # deg[k-1][j-1] = L_k . C_j
    areas: tuple[Fraction, ...]
    antican: tuple[int, ...]              # -K . C_j
    minimal_set: frozenset[int]
    line_set: frozenset[int]
    width: Fraction
    witness: int                          # smallest index attaining the width


def _transport_coroots(inp: BSInput, j: int):
    """Yield (k, s_{i_k} ... s_{i_{j+1}}(alpha_{i_j}^vee)) for k = j .. r."""
    word = inp.word
    gamma = simple_coroot(inp.rs, word[j - 1])
    yield j, gamma
    for k in range(j + 1, len(word) + 1):
        gamma = reflect_coroot(inp.rs, word[k - 1], gamma)
        yield k, gamma


def _transport_root(inp: BSInput, j: int) -> RootVec:
    """s_{i_r} ... s_{i_{j+1}}(alpha_{i_j}), rightmost reflection first."""
    word = inp.word
    alpha = simple_root(inp.rs, word[j - 1])
    for k in range(j + 1, len(word) + 1):
        alpha = reflect_root(inp.rs, word[k - 1], alpha)
    return alpha


def deg_matrix(inp: BSInput) -> tuple[tuple[int, ...], ...]:
    """The full r x r intersection matrix; zero above the diagonal (j > k)."""
    r = inp.r
    deg = [[0] * r for _ in range(r)]
    for j in range(1, r + 1):
        for k, gamma in _transport_coroots(inp, j):
            deg[k - 1][j - 1] = gamma.coords[inp.word[k - 1] - 1]
    return tuple(tuple(row) for row in deg)


def antican_degrees(inp: BSInput) -> tuple[int, ...]:
    """-K . C_j = height of the fully transported coroot, plus 1; always >= 2."""
    out = []
    for j in range(1, inp.r + 1):
        chain = list(_transport_coroots(inp, j))
        out.append(coroot_height(chain[-1][1]) + 1)
    return tuple(out)


def minimal_curves(inp: BSInput) -> frozenset[int]:
    """Indices whose fully transported root is simple; j = r always qualifies."""
    return frozenset(
        j for j in range(1, inp.r + 1) if is_simple_root(_transport_root(inp, j)))


def lines(inp: BSInput) -> frozenset[int]:
    """Indices with vanishing degree against every later bundle; r always qualifies."""
    deg = deg_matrix(inp)
    r = inp.r
    return frozenset(
        j for j in range(1, r + 1)
        if all(deg[k - 1][j - 1] == 0 for k in range(j + 1, r + 1)))


def areas(inp: BSInput) -> tuple[Fraction, ...]:
    """ell_j = sum_k m_k deg[k][j]; in particular ell_r = m_r."""
    deg = deg_matrix(inp)
    r = inp.r
    return tuple(
        sum((inp.m[k - 1] * deg[k - 1][j - 1] for k in range(1, r + 1)), Fraction(0))
        for j in range(1, r + 1))


def gromov_width(inp: BSInput) -> CurveReport:
    """Full curve report; the width is the minimum curve area.

    Both the minimum over all indices and the minimum over minimal curves
    are computed; their equality is a theorem, so disagreement raises
    InvariantViolation instead of silently returning either.
    """
    if inp.r == 0:
        raise InputError("width undefined for the empty word")
    deg = deg_matrix(inp)
    ell = areas(inp)
    minimal = minimal_curves(inp)
    width = min(ell)
    width_over_minimal = min(ell[j - 1] for j in minimal)
    if width != width_over_minimal:
        raise InvariantViolation(
            f"minimum over minimal curves {width_over_minimal} differs from "
            f"global minimum {width}")
    witness = next(j for j in range(1, inp.r + 1) if ell[j - 1] == width)
    return CurveReport(
        deg=deg,
        areas=ell,
        antican=antican_degrees(inp),
        minimal_set=minimal,
        line_set=lines(inp),
        width=width,
        witness=witness,
    )


def bs_input(rs: RootSystem, word: Sequence[int], m: Sequence) -> BSInput:
    """Convenience constructor accepting any rational-like coefficients."""
    return BSInput(rs, tuple(word), tuple(m))
