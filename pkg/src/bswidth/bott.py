"""Generalized Bott manifolds as smooth complete fans: rays, maximal cones,
primitive collections with their relations and degrees, the toric Gromov
width, and the Bott-tower degeneration of a reduced-word input.

An m-stage collection consists of fiber dimensions (n_1, ..., n_m) and twist
integers a_{j,l}^{(k)} for 2 <= j <= m, 1 <= k <= n_j, 1 <= l <= j-1.  Rays
live in Z^n, n = sum n_l, with the global coordinate order
e_1^1 .. e_1^{n_1}, ..., e_m^1 .. e_m^{n_m}:

    u_l^k = e_l^k                      for k = 1, ..., n_l,
    u_l^0 = -sum_k e_l^k + sum_{j>l} sum_k a_{j,l}^{(k)} e_j^k,

and the global ray order is u_1^0, u_1^1, ..., u_1^{n_1}, u_2^0, ...  One
maximal cone per tuple (k_1, ..., k_m), generated by all rays except the
u_l^{k_l}.  The primitive collections are exactly the per-stage ray sets
{u_l^0, ..., u_l^{n_l}}; with stage sums u(l) and divisor-coefficient sums
lambda(l), the Gromov width of the polarized toric manifold is
min{ lambda(l) : u(l) = 0 } (the last stage always qualifies).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .bscurve import BSInput, gromov_width
from .errors import InputError, InvariantViolation
from .gkpoly import build_chain, check_condition_p
from .render import q_str


@dataclass(frozen=True)
class BottCollection:
    """Stage dimensions plus twist integers, stored as sorted nonzero
    (j, l, k, a) quadruples."""

    dims: tuple[int, ...]
    twists: tuple[tuple[int, int, int, int], ...]

    @staticmethod
    def create(dims: Sequence[int], twists: Mapping[tuple[int, int, int], int]
               ) -> "BottCollection":
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 1 for d in dims):
            raise InputError(f"stage dimensions must be positive, got {dims}")
        m = len(dims)
        items = []
        for (j, l, k), a in twists.items():
            if not (2 <= j <= m and 1 <= l <= j - 1 and 1 <= k <= dims[j - 1]):
                raise InputError(f"twist index (j={j}, l={l}, k={k}) out of range")
            if a != 0:
                items.append((j, l, k, int(a)))
        return BottCollection(dims, tuple(sorted(items)))

    @property
    def stages(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def twist_map(self) -> dict[tuple[int, int, int], int]:
        return {(j, l, k): a for j, l, k, a in self.twists}

    def ray_index(self, l: int, k: int) -> int:
        """Global index of u_l^k; per stage the order is k = 0, 1, ..., n_l."""
        if not (1 <= l <= self.stages and 0 <= k <= self.dims[l - 1]):
            raise InputError(f"ray (l={l}, k={k}) out of range")
        return sum(d + 1 for d in self.dims[: l - 1]) + k

    @property
    def ray_count(self) -> int:
        return self.dim + self.stages


@dataclass(frozen=True)
class BottFan:
    dims: tuple[int, ...]
    rays: tuple[tuple[int, ...], ...]          # global ray order
    max_cones: tuple[tuple[int, ...], ...]     # ray indices, n per cone


@dataclass(frozen=True)
class DivisorClass:
    """One rational coefficient per ray, in global ray order."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def create(coeffs: Sequence) -> "DivisorClass":
        if any(isinstance(c, float) for c in coeffs):
            raise InputError("divisor coefficients must be exact rationals, not floats")
        return DivisorClass(tuple(Fraction(c) for c in coeffs))


@dataclass(frozen=True)
class PrimRelation:
    stage: int
    members: tuple[int, ...]                   # ray indices of the collection
    u_sum: tuple[int, ...]
    lambda_sum: Optional[Fraction]
    cone_coeffs: tuple[tuple[int, int], ...]   # (ray index, positive coeff)
    degree: int


def build_fan(c: BottCollection) -> BottFan:
    n, m = c.dim, c.stages
    coord_off = [sum(c.dims[:l]) for l in range(m)]
    twist = c.twist_map()
    rays: list[tuple[int, ...]] = []
    for l in range(1, m + 1):
        u0 = [0] * n
        for k in range(1, c.dims[l - 1] + 1):
            u0[coord_off[l - 1] + k - 1] = -1
        for j in range(l + 1, m + 1):
            for k in range(1, c.dims[j - 1] + 1):
                a = twist.get((j, l, k), 0)
                if a:
                    u0[coord_off[j - 1] + k - 1] = a
        rays.append(tuple(u0))
        for k in range(1, c.dims[l - 1] + 1):
            e = [0] * n
            e[coord_off[l - 1] + k - 1] = 1
            rays.append(tuple(e))
    cones = []
    for drop in itertools.product(*(range(d + 1) for d in c.dims)):
        cone = [c.ray_index(l, k)
                for l in range(1, m + 1)
                for k in range(0, c.dims[l - 1] + 1)
                if k != drop[l - 1]]
        cones.append(tuple(cone))
    return BottFan(c.dims, tuple(rays), tuple(cones))


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise InputError("determinant of a non-square matrix")
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for col in range(i + 1, n):
                m[r][col] = (m[r][col] * m[i][i] - m[r][i] * m[i][col]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def check_smooth(fan: BottFan) -> bool:
    """Every maximal cone's generator matrix must have determinant +-1."""
    n = len(fan.rays[0]) if fan.rays else 0
    for cone in fan.max_cones:
        if len(cone) != n:
            return False
        if abs(det_int([fan.rays[i] for i in cone])) != 1:
            return False
    return True


def _solve_square(cols: list[tuple[int, ...]], target: Sequence[int]
                  ) -> Optional[list[Fraction]]:
    """Solve sum_i x_i cols[i] = target exactly; None if singular."""
    n = len(cols)
    aug = [[Fraction(cols[j][row]) for j in range(n)] + [Fraction(target[row])]
           for row in range(n)]
    for i in range(n):
        piv = next((r for r in range(i, n) if aug[r][i] != 0), None)
        if piv is None:
            return None
        aug[i], aug[piv] = aug[piv], aug[i]
        inv = 1 / aug[i][i]
        aug[i] = [v * inv for v in aug[i]]
        for r in range(n):
            if r != i and aug[r][i]:
                f = aug[r][i]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[i])]
    return [aug[r][n] for r in range(n)]


def primitive_relations(c: BottCollection, d: Optional[DivisorClass] = None
                        ) -> list[PrimRelation]:
    """One relation per stage.  For a nonzero stage sum the expression over
    the unique containing cone is found by solving the unimodular system in
    every maximal cone and keeping the strictly positive support; all
    containing cones must agree on that support.
    """
    if d is not None and len(d.coeffs) != c.ray_count:
        raise InputError(
            f"divisor has {len(d.coeffs)} coefficients, fan has {c.ray_count} rays")
    fan = build_fan(c)
    n = c.dim
    out = []
    for l in range(1, c.stages + 1):
        members = tuple(c.ray_index(l, k) for k in range(0, c.dims[l - 1] + 1))
        u_sum = tuple(sum(fan.rays[i][t] for i in members) for t in range(n))
        lam = (sum((d.coeffs[i] for i in members), Fraction(0))
               if d is not None else None)
        size = c.dims[l - 1] + 1
        if all(x == 0 for x in u_sum):
            out.append(PrimRelation(l, members, u_sum, lam, (), size))
            continue
        supports = set()
        for cone in fan.max_cones:
            sol = _solve_square([fan.rays[i] for i in cone], u_sum)
            if sol is None:
                raise InvariantViolation("singular maximal cone in a Bott fan")
            if all(x >= 0 for x in sol):
                supports.add(tuple(
                    (ray, coeff) for ray, coeff in zip(cone, sol) if coeff > 0))
        if len(supports) != 1:
            raise InvariantViolation(
                f"stage {l} sum lies in {len(supports)} distinct cone supports")
        support = supports.pop()
        coeffs = []
        for ray, coeff in support:
            if coeff.denominator != 1:
                raise InvariantViolation(
                    f"non-integral cone coefficient {coeff} at stage {l}")
            coeffs.append((ray, int(coeff)))
        out.append(PrimRelation(l, members, u_sum, lam, tuple(coeffs),
                                size - sum(a for _, a in coeffs)))
    return out


def relation_pairing(d: DivisorClass, rel: PrimRelation) -> Fraction:
    """Pair a zero-sum relation with a divisor: the indicator vector of the
    collection dotted with the coefficient list.  Cross-checked against the
    direct stage sum recorded on the relation.
    """
    if any(x != 0 for x in rel.u_sum):
        raise InputError("relation pairing requires a zero stage sum")
    member_set = set(rel.members)
    indicator = sum((coeff for i, coeff in enumerate(d.coeffs) if i in member_set),
                    Fraction(0))
    direct = sum((d.coeffs[i] for i in rel.members), Fraction(0))
    if indicator != direct:
        raise InvariantViolation(
            f"indicator pairing {indicator} disagrees with stage sum {direct}")
    return indicator


def toric_width(c: BottCollection, d: DivisorClass) -> tuple[Fraction, int]:
    """min{ lambda(l) : u(l) = 0 } and the smallest attaining stage.

    u(l) = 0 exactly when every twist a_{j,l}^{(k)} with j > l vanishes, so
    the last stage always qualifies.  Whether the class is actually Kahler
    is not checked here.
    """
    if len(d.coeffs) != c.ray_count:
        raise InputError(
            f"divisor has {len(d.coeffs)} coefficients, fan has {c.ray_count} rays")
    twisted = {l for _, l, _, _ in c.twists}  # stages hit by a nonzero twist
    best: Optional[tuple[Fraction, int]] = None
    for l in range(1, c.stages + 1):
        if l in twisted:
            continue
        lam = sum((d.coeffs[c.ray_index(l, k)] for k in range(0, c.dims[l - 1] + 1)),
                  Fraction(0))
        if best is None or lam < best[0]:
            best = (lam, l)
    if best is None:
        raise InvariantViolation("no stage with zero sum; the last always qualifies")
    return best


def degenerate_bott_tower(inp: BSInput, force: bool = False
                          ) -> tuple[BottCollection, DivisorClass]:
    """The rank-one Bott tower a reduced-word input degenerates to, plus its
    polarization.

    Stage count r, all fiber dimensions 1, twists
    a_{k,j}^{(1)} = -<alpha_{i_k}, alpha_{i_j}^vee> for k > j (the sign that
    makes build_fan reproduce u_j^0 = -e_j - sum_{k>j} <alpha_{i_k},
    alpha_{i_j}^vee> e_k), and divisor coefficient
    a_j = m_j + (sum of later m_l with i_l = i_j) on each u_j^0 ray, zero on
    the unit rays.

    Requires condition (P); ``force=True`` skips the refusal for
    exploration, in which case downstream equalities are not guaranteed.
    """
    if inp.r == 0:
        raise InputError("cannot degenerate the empty word")
    report = check_condition_p(build_chain(inp))
    if not report.holds and not force:
        w = report.witness
        raise InputError(
            "condition (P) fails: A_%d reaches %s at (%s); "
            "pass force to degenerate anyway"
            % (w.k, q_str(w.value), ", ".join(q_str(x) for x in w.point)))
    rs, word, m = inp.rs, inp.word, inp.m
    r = inp.r
    twists = {}
    for j in range(1, r + 1):
        for k in range(j + 1, r + 1):
            a = -rs.cartan[word[j - 1] - 1][word[k - 1] - 1]
            if a:
                twists[(k, j, 1)] = a
    coeffs = []
    for j in range(1, r + 1):
        aj = sum((m[l - 1] for l in range(j, r + 1) if word[l - 1] == word[j - 1]),
                 Fraction(0))
        coeffs.extend([aj, Fraction(0)])
    return BottCollection.create((1,) * r, twists), DivisorClass(tuple(coeffs))


def caseline_width(inp: BSInput) -> Fraction:
    """min{ m_j : <alpha_{i_k}, alpha_{i_j}^vee> = 0 for all k > j }.

    The index set always contains j = r.  When condition (P) holds this must
    agree with the curve-area width and with the toric width of the
    degenerate tower; both equalities are asserted.
    """
    if inp.r == 0:
        raise InputError("width undefined for the empty word")
    rs, word = inp.rs, inp.word
    r = inp.r
    qualifying = [
        j for j in range(1, r + 1)
        if all(rs.cartan[word[j - 1] - 1][word[k - 1] - 1] == 0
               for k in range(j + 1, r + 1))]
    width = min(inp.m[j - 1] for j in qualifying)
    if check_condition_p(build_chain(inp)).holds:
        curve = gromov_width(inp).width
        tower, divisor = degenerate_bott_tower(inp)
        toric, _ = toric_width(tower, divisor)
        if not (width == curve == toric):
            raise InvariantViolation(
                f"width routes disagree under condition (P): "
                f"line {q_str(width)}, curve {q_str(curve)}, toric {q_str(toric)}")
    return width
