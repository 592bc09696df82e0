"""The chain polytope of a reduced word: bound functions, the exact
condition-(P) decision procedure, and lattice-point enumeration.

The polytope lives in variables x_1, ..., x_r and is cut out by
0 <= x_k <= A_k(x_{k+1}, ..., x_r), where

    A_k = <m_k varpi_{i_k} + ... + m_r varpi_{i_r}
           - x_{k+1} alpha_{i_{k+1}} - ... - x_r alpha_{i_r},  alpha_{i_k}^vee>,

so the coefficient of x_l in A_k is -<alpha_{i_l}, alpha_{i_k}^vee> and the
constant term is the sum of those m_l with l >= k and i_l = i_k (A_r is the
constant m_r).  Condition (P-k) says A_k >= 0 on the region cut out by the
later bounds; condition (P) is m_r >= 0 together with (P-k) for all
k = 1, ..., r-1.

(P-k) is a statement over real points, so it is decided by an exact affine
minimizer over the truncated chain region, never by grid sampling: vertices
of the region can be non-integral for rational coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional

from .bscurve import BSInput
from .errors import CapExceeded, ChainRegionError, InputError, InvariantViolation


@dataclass(frozen=True)
class AffineForm:
    """constant + sum_j coeffs[j] * x_{variables[j]}, all exact rationals.

    The variable index set is recorded explicitly; zero coefficients are kept.
    """

    variables: tuple[int, ...]
    coeffs: tuple[Fraction, ...]
    constant: Fraction

    def __post_init__(self):
        if len(self.variables) != len(self.coeffs):
            raise InputError("one coefficient per variable required")
        if len(set(self.variables)) != len(self.variables):
            raise InputError(f"repeated variables in {self.variables}")

    def coeff(self, var: int) -> Fraction:
        for v, c in zip(self.variables, self.coeffs):
            if v == var:
                return c
        return Fraction(0)

    def evaluate(self, values: Mapping[int, Fraction | int]) -> Fraction:
        total = self.constant
        for v, c in zip(self.variables, self.coeffs):
            total += c * values[v]
        return total

    @property
    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class GKChain:
    """Bound functions A_1, ..., A_r; A_k depends only on x_{k+1}, ..., x_r."""

    r: int
    forms: tuple[AffineForm, ...]  # forms[k-1] is A_k

    def __post_init__(self):
        if len(self.forms) != self.r:
            raise InputError(f"{len(self.forms)} bound functions for r = {self.r}")
        for k, f in enumerate(self.forms, start=1):
            if any(not k < v <= self.r for v in f.variables):
                raise InputError(f"A_{k} may only depend on x_{k + 1}..x_{self.r}")

    def form(self, k: int) -> AffineForm:
        if not 1 <= k <= self.r:
            raise InputError(f"bound index {k} out of range 1..{self.r}")
        return self.forms[k - 1]


@dataclass(frozen=True)
class ChainMin:
    """Exact minimum of a bound function over the truncated chain region.

    ``point`` lists (x_{k+1}, ..., x_r); it is empty when the function is
    constant, in which case every point of the region attains the value.
    """

    value: Fraction
    point: tuple[Fraction, ...]


@dataclass(frozen=True)
class PWitness:
    k: int
    point: tuple[Fraction, ...]
    value: Fraction


@dataclass(frozen=True)
class ConditionPReport:
    holds: bool
    # (k, minimum, attaining point) in evaluation order (k decreasing);
    # entries below the first failure are not computable and appear in
    # ``not_evaluated`` instead.
    minima: tuple[tuple[int, Fraction, tuple[Fraction, ...]], ...]
    witness: Optional[PWitness]
    not_evaluated: tuple[int, ...]


def build_chain(inp: BSInput) -> GKChain:
    """Bound functions of a reduced word with positive coefficients."""
    rs, word, m = inp.rs, inp.word, inp.m
    r = len(word)
    forms = []
    for k in range(1, r + 1):
        ik = word[k - 1]
        variables = tuple(range(k + 1, r + 1))
        coeffs = tuple(Fraction(-rs.cartan[ik - 1][word[l - 1] - 1]) for l in variables)
        constant = sum((m[l - 1] for l in range(k, r + 1) if word[l - 1] == ik),
                       Fraction(0))
        forms.append(AffineForm(variables, coeffs, constant))
    return GKChain(r, tuple(forms))


def min_affine_over_chain(chain: GKChain, k: int) -> ChainMin:
    """Exact minimum of A_k over { 0 <= x_j <= A_j : j > k } by backward
    substitution.

    Precondition (certified by the caller, normally check_condition_p run in
    decreasing k): conditions (P-j) hold for all j > k, so every interval
    [0, A_j] is nonempty over the region.  Variables are eliminated in
    increasing index order: a nonnegative current coefficient pins x_j = 0,
    a negative one pins x_j = A_j (an affine form in later variables).
    Every vertex of the triangular chain region has each coordinate at 0 or
    at its upper bound given the later coordinates, so the greedy
    substitution is exact.
    """
    r = chain.r
    if not 1 <= k <= r - 1:
        raise InputError(f"bound index {k} out of range 1..{r - 1}")
    base = chain.form(k)
    cur: dict[int, Fraction] = {v: c for v, c in zip(base.variables, base.coeffs) if c}
    constant = base.constant
    pins: dict[int, str] = {}
    for j in range(k + 1, r + 1):
        c = cur.pop(j, Fraction(0))
        if c == 0:
            continue
        if c > 0:
            pins[j] = "zero"
        else:
            pins[j] = "upper"
            upper = chain.form(j)
            constant += c * upper.constant
            for v, cv in zip(upper.variables, upper.coeffs):
                if cv:
                    cur[v] = cur.get(v, Fraction(0)) + c * cv
                    if cur[v] == 0:
                        del cur[v]
    if cur:
        raise InvariantViolation("substitution left unexpected variables behind")

    if not pins:
        return ChainMin(constant, ())

    values: dict[int, Fraction] = {}
    for j in range(r, k, -1):
        if pins.get(j) == "upper":
            xj = chain.form(j).evaluate(values)
            if xj < 0:
                raise ChainRegionError(
                    f"bound A_{j} is negative over the region; "
                    f"conditions above k={k} were not certified")
            values[j] = xj
        else:
            values[j] = Fraction(0)
    if base.evaluate(values) != constant:
        raise InvariantViolation("reconstructed point does not attain the minimum")
    return ChainMin(constant, tuple(values[j] for j in range(k + 1, r + 1)))


def min_affine_brute_force(chain: GKChain, k: int) -> ChainMin:
    """Independent oracle: enumerate all 2^(r-k) substitution patterns (each
    variable at 0 or at its upper bound given the later choices) and take
    the minimum.  Exponential; for cross-checking only.
    """
    r = chain.r
    if not 1 <= k <= r - 1:
        raise InputError(f"bound index {k} out of range 1..{r - 1}")
    target = chain.form(k)
    best: list = [None, None]
    values: dict[int, Fraction] = {}

    def descend(j: int) -> None:
        if j == k:
            val = target.evaluate(values)
            if best[0] is None or val < best[0]:
                best[0] = val
                best[1] = tuple(values[t] for t in range(k + 1, r + 1))
            return
        for choice in (Fraction(0), chain.form(j).evaluate(values)):
            values[j] = choice
            descend(j - 1)
        del values[j]

    descend(r)
    return ChainMin(best[0], best[1])


def check_condition_p(chain: GKChain) -> ConditionPReport:
    """Decide condition (P): m_r >= 0 and every A_k nonnegative over the
    truncated region, evaluated for k = r-1 down to 1.

    Evaluation stops at the first (largest) failing k: below it the region
    is no longer certified, so those minima are reported as not evaluated.
    """
    r = chain.r
    if r == 0:  # point polytope, nothing to check
        return ConditionPReport(holds=True, minima=(), witness=None,
                                not_evaluated=())
    tail = chain.form(r).constant  # A_r is the constant m_r
    if tail < 0:
        return ConditionPReport(
            holds=False, minima=(),
            witness=PWitness(r, (), tail),
            not_evaluated=tuple(range(r - 1, 0, -1)))
    minima = []
    for k in range(r - 1, 0, -1):
        res = min_affine_over_chain(chain, k)
        minima.append((k, res.value, res.point))
        if res.value < 0:
            return ConditionPReport(
                holds=False, minima=tuple(minima),
                witness=PWitness(k, res.point, res.value),
                not_evaluated=tuple(range(k - 1, 0, -1)))
    return ConditionPReport(holds=True, minima=tuple(minima),
                            witness=None, not_evaluated=())


def iter_lattice_points(chain: GKChain) -> Iterator[tuple[int, ...]]:
    """Integer points of the inequality system, streamed deterministically:
    x_r varies slowest, x_1 fastest; negative upper bounds give empty ranges,
    so enumeration is well-defined whether or not condition (P) holds.
    """
    r = chain.r
    values: dict[int, int] = {}

    def descend(j: int) -> Iterator[tuple[int, ...]]:
        if j == 0:
            yield tuple(values[t] for t in range(1, r + 1))
            return
        upper = chain.form(j).evaluate(values)
        for x in range(0, math.floor(upper) + 1):
            values[j] = x
            yield from descend(j - 1)
        values.pop(j, None)

    yield from descend(r)


def lattice_points(chain: GKChain, cap: int, collect: bool = False):
    """Count (optionally collect) the lattice points, aborting past ``cap``."""
    if cap <= 0:
        raise InputError(f"cap must be positive, got {cap}")
    count = 0
    points = [] if collect else None
    for pt in iter_lattice_points(chain):
        count += 1
        if count > cap:
            raise CapExceeded(cap)
        if collect:
            points.append(pt)
    return (count, points) if collect else (count, None)
