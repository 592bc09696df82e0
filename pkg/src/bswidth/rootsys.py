"""Exact finite-root-system arithmetic: Cartan data, pairings, reflections.

Conventions, pinned once and used everywhere:

* ``cartan[i][j] = <alpha_j, alpha_i^vee>`` -- rows are indexed by coroots,
  columns by roots.  Both indices are 0-based in storage; every public
  operation takes 1-based node indices to match word letters.
* Bourbaki node numbering within each family; reducible types number their
  nodes component by component in input order.
* ``RootVec`` / ``CorootVec`` coordinates live in the simple-root /
  simple-coroot basis and are integers.  ``WeightVec`` coordinates live in
  the fundamental-weight basis and are exact rationals.
* A root vector is positive iff all coordinates are >= 0, negative iff all
  are <= 0; vectors reached from simple roots by reflection chains are
  always one or the other.
* All arithmetic is exact; no floating point anywhere in this package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from .errors import InputError, InvariantViolation

_COMPONENT_RE = re.compile(r"^([A-G])([0-9]+)$")

# Canonical rank window per family, after alias rewriting.
_RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (3, None),
                "D": (4, None), "E": (6, 8), "F": (4, 4), "G": (2, 2)}

# Low-rank coincidences accepted on input.
_ALIASES = {
    ("B", 1): (("A", 1),),
    ("C", 2): (("B", 2),),
    ("D", 2): (("A", 1), ("A", 1)),
    ("D", 3): (("A", 3),),
}


@dataclass(frozen=True)
class DynkinType:
    """A (possibly reducible) finite Dynkin type, e.g. A3+B2."""

    components: tuple[tuple[str, int], ...]

    @staticmethod
    def parse(text: str) -> "DynkinType":
        parts = [p.strip() for p in text.strip().split("+")]
        comps = []
        for part in parts:
            m = _COMPONENT_RE.match(part)
            if not m:
                raise InputError(f"cannot parse Dynkin component {part!r}")
            comps.append((m.group(1), int(m.group(2))))
        if not comps:
            raise InputError("empty Dynkin type")
        return DynkinType(tuple(comps)).canonical()

    def canonical(self) -> "DynkinType":
        out: list[tuple[str, int]] = []
        for fam, rank in self.components:
            for cfam, crank in _ALIASES.get((fam, rank), ((fam, rank),)):
                lo, hi = _RANK_BOUNDS[cfam]
                if rank < 1 or crank < lo or (hi is not None and crank > hi):
                    raise InputError(f"rank {rank} out of range for family {fam}")
                out.append((cfam, crank))
        return DynkinType(tuple(out))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def __str__(self) -> str:
        return "+".join(f"{f}{r}" for f, r in self.components)


@dataclass(frozen=True)
class RootSystem:
    """Cartan matrix of a canonical finite type; block-diagonal if reducible."""

    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)


@dataclass(frozen=True)
class RootVec:
    coords: tuple[int, ...]


@dataclass(frozen=True)
class CorootVec:
    coords: tuple[int, ...]


@dataclass(frozen=True)
class WeightVec:
    coords: tuple[Fraction, ...]


def _chain_matrix(rank: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _component_cartan(family: str, rank: int) -> list[list[int]]:
    """Classification table under the pinned pairing convention."""
    c = _chain_matrix(rank)
    if family == "A":
        pass
    elif family == "B":
        # alpha_rank short: <alpha_{n-1}, alpha_n^vee> = -2
        c[rank - 1][rank - 2] = -2
    elif family == "C":
        # alpha_rank long: <alpha_n, alpha_{n-1}^vee> = -2
        c[rank - 2][rank - 1] = -2
    elif family == "D":
        c[rank - 2][rank - 1] = 0
        c[rank - 1][rank - 2] = 0
        c[rank - 3][rank - 1] = -1
        c[rank - 1][rank - 3] = -1
    elif family == "E":
        # Bourbaki: chain 1-3-4-5-..., branch node 2 attached to 4.
        c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)][: rank - 2]
        edges.append((2, 4))
        for a, b in edges:
            c[a - 1][b - 1] = -1
            c[b - 1][a - 1] = -1
    elif family == "F":
        # double bond 2 => 3: <alpha_2, alpha_3^vee> = -2
        c[2][1] = -2
    elif family == "G":
        # pinned: c[1][2] = <alpha_2, alpha_1^vee> = -1, c[2][1] = -3
        c[0][1] = -1
        c[1][0] = -3
    else:  # pragma: no cover - parse() already rejects unknown families
        raise InputError(f"unknown family {family!r}")
    return c


def build_root_system(t: DynkinType | str) -> RootSystem:
    """Block-diagonal Cartan matrix of a canonicalized Dynkin type."""
    if isinstance(t, str):
        t = DynkinType.parse(t)
    else:
        t = t.canonical()
    n = t.rank
    mat = [[0] * n for _ in range(n)]
    off = 0
    for fam, rank in t.components:
        block = _component_cartan(fam, rank)
        for i in range(rank):
            for j in range(rank):
                mat[off + i][off + j] = block[i][j]
        off += rank
    return RootSystem(t, tuple(tuple(row) for row in mat))


def _check_node(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise InputError(f"node index {i} out of range 1..{rs.rank}")


def simple_root(rs: RootSystem, i: int) -> RootVec:
    _check_node(rs, i)
    return RootVec(tuple(1 if j == i - 1 else 0 for j in range(rs.rank)))


def simple_coroot(rs: RootSystem, i: int) -> CorootVec:
    _check_node(rs, i)
    return CorootVec(tuple(1 if j == i - 1 else 0 for j in range(rs.rank)))


def fundamental_weight(rs: RootSystem, i: int) -> WeightVec:
    _check_node(rs, i)
    return WeightVec(tuple(Fraction(1 if j == i - 1 else 0) for j in range(rs.rank)))


def pair(lam: WeightVec, gamma: CorootVec) -> Fraction:
    """<lam, gamma> in the dual bases: plain coordinate dot product."""
    if len(lam.coords) != len(gamma.coords):
        raise InputError("rank mismatch in pairing")
    return sum((a * b for a, b in zip(lam.coords, gamma.coords)), Fraction(0))


def root_coroot_pairing(rs: RootSystem, alpha: RootVec, i: int) -> int:
    """<alpha, alpha_i^vee> = sum_j c[i][j] alpha_j."""
    _check_node(rs, i)
    return sum(c * a for c, a in zip(rs.cartan[i - 1], alpha.coords))


def coroot_root_pairing(rs: RootSystem, i: int, gamma: CorootVec) -> int:
    """<alpha_i, gamma> = sum_j gamma_j c[j][i]."""
    _check_node(rs, i)
    return sum(rs.cartan[j][i - 1] * g for j, g in enumerate(gamma.coords))


def reflect_root(rs: RootSystem, i: int, alpha: RootVec) -> RootVec:
    """s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i; touches coordinate i only."""
    p = root_coroot_pairing(rs, alpha, i)
    coords = list(alpha.coords)
    coords[i - 1] -= p
    return RootVec(tuple(coords))


def reflect_coroot(rs: RootSystem, i: int, gamma: CorootVec) -> CorootVec:
    """s_i(gamma) = gamma - <alpha_i, gamma> alpha_i^vee (dual convention)."""
    p = coroot_root_pairing(rs, i, gamma)
    coords = list(gamma.coords)
    coords[i - 1] -= p
    return CorootVec(tuple(coords))


def reflect_weight(rs: RootSystem, i: int, lam: WeightVec) -> WeightVec:
    """s_i(lam) = lam - lam_i * alpha_i, with alpha_i written in weight coordinates."""
    _check_node(rs, i)
    li = lam.coords[i - 1]
    coords = [lam.coords[k] - li * rs.cartan[k][i - 1] for k in range(rs.rank)]
    return WeightVec(tuple(coords))


def weight_of_root(rs: RootSystem, alpha: RootVec) -> WeightVec:
    """Change of basis: alpha_j in weight coordinates is column j of the Cartan matrix."""
    if len(alpha.coords) != rs.rank:
        raise InputError("rank mismatch")
    coords = [Fraction(sum(rs.cartan[i][j] * alpha.coords[j] for j in range(rs.rank)))
              for i in range(rs.rank)]
    return WeightVec(tuple(coords))


def is_positive_root(v: RootVec | CorootVec) -> bool:
    return all(c >= 0 for c in v.coords) and any(c != 0 for c in v.coords)


def is_negative_root(v: RootVec | CorootVec) -> bool:
    return all(c <= 0 for c in v.coords) and any(c != 0 for c in v.coords)


def is_simple_root(v: RootVec) -> bool:
    return sum(v.coords) == 1 and all(c in (0, 1) for c in v.coords)


def coroot_height(gamma: CorootVec) -> int:
    """Sum of simple-coroot coefficients = sum_i <varpi_i, gamma>."""
    return sum(gamma.coords)


def positive_root_count(t: DynkinType | RootSystem) -> int:
    """Closed-form count from the classification, summed over components."""
    dynkin = t.dynkin if isinstance(t, RootSystem) else t.canonical()
    per = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n,
           "C": lambda n: n * n, "D": lambda n: n * (n - 1),
           "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
           "F": lambda n: 24, "G": lambda n: 6}
    return sum(per[f](r) for f, r in dynkin.components)


def positive_roots(rs: RootSystem) -> frozenset[RootVec]:
    """All positive roots, by orbit search from the simple roots.

    A positive root stays positive under s_i unless it is alpha_i itself,
    so closing the simple roots under reflections and keeping the
    nonnegative vectors exhausts R+.
    """
    expected = positive_root_count(rs)
    seen: set[RootVec] = {simple_root(rs, i) for i in range(1, rs.rank + 1)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for alpha in frontier:
            for i in range(1, rs.rank + 1):
                beta = reflect_root(rs, i, alpha)
                if is_positive_root(beta) and beta not in seen:
                    seen.add(beta)
                    nxt.append(beta)
        frontier = nxt
        if len(seen) > expected:
            raise InvariantViolation(
                f"orbit search found more than {expected} positive roots for {rs.dynkin}")
    return frozenset(seen)
