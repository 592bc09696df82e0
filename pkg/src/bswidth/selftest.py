"""Seeded randomized cross-check suites, shared by the CLI and the test
suite.  Every suite is deterministic in (suite, trials, seed) and reports
failures with a reproduction spec.

Trial generation: type drawn uniformly from {A2..A5, B2..B4, C3, D4, G2,
F4}, word via the seeded greedy generator with length <= 12 (capped by the
number of positive roots), coefficients uniform integers in 1..10; the
scaling suite additionally draws a positive rational factor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bott import (
    BottCollection,
    DivisorClass,
    build_fan,
    check_smooth,
    degenerate_bott_tower,
    primitive_relations,
    relation_pairing,
    toric_width,
)
from .bscurve import BSInput, antican_degrees, areas, gromov_width, minimal_curves
from .gkpoly import build_chain, check_condition_p, min_affine_brute_force, min_affine_over_chain
from .render import q_str
from .rootsys import build_root_system, positive_root_count
from .words import random_reduced_word

TYPE_POOL = ("A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "G2", "F4")

SUITES = ("cor25", "antican2", "caseline", "pmin-oracle", "scaling", "smoothfan")

DEFAULT_TRIALS = {
    "cor25": 1000,
    "antican2": 1000,
    "caseline": 1000,
    "pmin-oracle": 500,
    "scaling": 500,
    "smoothfan": 200,
}


@dataclass(frozen=True)
class Trial:
    index: int
    type_str: str
    word: tuple[int, ...]
    m: tuple[Fraction, ...]

    def spec(self) -> dict:
        return {"type": self.type_str, "word": list(self.word),
                "m": [q_str(x) for x in self.m]}


@dataclass
class SuiteResult:
    suite: str
    trials: int
    failures: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def sample_input(rng: random.Random, max_len: int = 12, m_hi: int = 10) -> tuple[str, BSInput]:
    type_str = rng.choice(TYPE_POOL)
    rs = build_root_system(type_str)
    r = rng.randint(1, min(max_len, positive_root_count(rs)))
    word = random_reduced_word(rs, r, seed=rng.randrange(2 ** 32))
    m = tuple(Fraction(rng.randint(1, m_hi)) for _ in range(r))
    return type_str, BSInput(rs, word, m)


def iter_trials(trials: int, seed: int, max_len: int = 12):
    rng = random.Random(seed)
    for t in range(trials):
        type_str, inp = sample_input(rng, max_len=max_len)
        yield Trial(t, type_str, inp.word, inp.m), inp, rng


def _fail(result: SuiteResult, trial: Trial, detail: str) -> None:
    result.failures.append({"trial": trial.index, "detail": detail, **trial.spec()})


def suite_cor25(trials: int, seed: int) -> SuiteResult:
    """Minimum area over minimal curves equals the global minimum area."""
    result = SuiteResult("cor25", trials)
    for trial, inp, _ in iter_trials(trials, seed):
        ell = areas(inp)
        minimal = minimal_curves(inp)
        global_min = min(ell)
        minimal_min = min(ell[j - 1] for j in minimal)
        if global_min != minimal_min:
            _fail(result, trial,
                  f"min over minimal {q_str(minimal_min)} != global {q_str(global_min)}")
    return result


def suite_antican2(trials: int, seed: int) -> SuiteResult:
    """Root-simplicity minimality equals anticanonical degree 2."""
    result = SuiteResult("antican2", trials)
    for trial, inp, _ in iter_trials(trials, seed):
        by_root = minimal_curves(inp)
        by_height = frozenset(
            j for j, d in enumerate(antican_degrees(inp), start=1) if d == 2)
        if by_root != by_height:
            _fail(result, trial,
                  f"simplicity test {sorted(by_root)} != degree-2 test {sorted(by_height)}")
    return result


def suite_caseline(trials: int, seed: int) -> SuiteResult:
    """Under condition (P): curve width = line-area width = toric width of
    the degenerate tower.  Unconditionally: curve width <= line-area width.
    """
    result = SuiteResult("caseline", trials)
    holding = 0
    for trial, inp, _ in iter_trials(trials, seed):
        report = gromov_width(inp)
        rs, word, r = inp.rs, inp.word, inp.r
        qualifying = [
            j for j in range(1, r + 1)
            if all(rs.cartan[word[j - 1] - 1][word[k - 1] - 1] == 0
                   for k in range(j + 1, r + 1))]
        line_width = min(inp.m[j - 1] for j in qualifying)
        if report.width > line_width:
            _fail(result, trial,
                  f"curve width {q_str(report.width)} exceeds line width {q_str(line_width)}")
            continue
        if not check_condition_p(build_chain(inp)).holds:
            continue
        holding += 1
        tower, divisor = degenerate_bott_tower(inp)
        toric, _ = toric_width(tower, divisor)
        if not (report.width == line_width == toric):
            _fail(result, trial,
                  f"widths disagree: curve {q_str(report.width)}, "
                  f"line {q_str(line_width)}, toric {q_str(toric)}")
    result.info["p_holds"] = holding
    result.info["p_fraction"] = q_str(Fraction(holding, trials)) if trials else "0"
    return result


def suite_pmin_oracle(trials: int, seed: int, max_len: int = 10) -> SuiteResult:
    """Backward-substitution minima against the 2^(r-k) substitution-pattern
    oracle, for every k down to (and including) the first failing one."""
    result = SuiteResult("pmin-oracle", trials)
    compared = 0
    for trial, inp, _ in iter_trials(trials, seed, max_len=max_len):
        chain = build_chain(inp)
        for k in range(chain.r - 1, 0, -1):
            fast = min_affine_over_chain(chain, k)
            slow = min_affine_brute_force(chain, k)
            compared += 1
            if fast.value != slow.value:
                _fail(result, trial,
                      f"A_{k}: substitution min {q_str(fast.value)} != "
                      f"oracle min {q_str(slow.value)}")
                break
            if fast.value < 0:
                break  # region below k is no longer certified
    result.info["comparisons"] = compared
    return result


def suite_scaling(trials: int, seed: int) -> SuiteResult:
    """Homogeneity: width(a*m) = a*width(m) with the same witness, and the
    condition-(P) verdict is scale invariant."""
    result = SuiteResult("scaling", trials)
    for trial, inp, rng in iter_trials(trials, seed):
        a = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        scaled = BSInput(inp.rs, inp.word, tuple(a * x for x in inp.m))
        base = gromov_width(inp)
        big = gromov_width(scaled)
        if big.width != a * base.width or big.witness != base.witness:
            _fail(result, trial,
                  f"scaling by {q_str(a)}: width {q_str(base.width)} -> "
                  f"{q_str(big.width)}, witness {base.witness} -> {big.witness}")
            continue
        p0 = check_condition_p(build_chain(inp))
        p1 = check_condition_p(build_chain(scaled))
        if p0.holds != p1.holds:
            _fail(result, trial, f"condition (P) verdict changed under scaling by {q_str(a)}")
    return result


def sample_collection(rng: random.Random, max_stages: int = 4, max_dim: int = 3,
                      max_twist: int = 3) -> BottCollection:
    dims = tuple(rng.randint(1, max_dim) for _ in range(rng.randint(1, max_stages)))
    twists = {}
    for j in range(2, len(dims) + 1):
        for l in range(1, j):
            for k in range(1, dims[j - 1] + 1):
                twists[(j, l, k)] = rng.randint(-max_twist, max_twist)
    return BottCollection.create(dims, twists)


def suite_smoothfan(trials: int, seed: int) -> SuiteResult:
    """Random collections: the fan is smooth, there is one primitive relation
    per stage, the last stage sum vanishes, zero-sum relations have degree
    n_l + 1, and their divisor pairing equals the stage coefficient sum."""
    result = SuiteResult("smoothfan", trials)
    rng = random.Random(seed)
    for t in range(trials):
        c = sample_collection(rng)
        d = DivisorClass(tuple(Fraction(rng.randint(-5, 9)) for _ in range(c.ray_count)))
        repro = {"dims": list(c.dims),
                 "a": {f"{j},{l},{k}": a for j, l, k, a in c.twists}}
        fan = build_fan(c)
        if not check_smooth(fan):
            result.failures.append({"trial": t, "detail": "fan not smooth", **repro})
            continue
        rels = primitive_relations(c, d)
        if len(rels) != c.stages:
            result.failures.append(
                {"trial": t, "detail": f"{len(rels)} relations for {c.stages} stages",
                 **repro})
            continue
        if any(x != 0 for x in rels[-1].u_sum):
            result.failures.append(
                {"trial": t, "detail": "last stage has nonzero sum", **repro})
            continue
        for rel in rels:
            if any(x != 0 for x in rel.u_sum):
                continue
            if rel.degree != c.dims[rel.stage - 1] + 1:
                result.failures.append(
                    {"trial": t, "detail": f"zero-sum stage {rel.stage} degree "
                     f"{rel.degree} != {c.dims[rel.stage - 1] + 1}", **repro})
                break
            if relation_pairing(d, rel) != rel.lambda_sum:
                result.failures.append(
                    {"trial": t,
                     "detail": f"pairing mismatch at stage {rel.stage}", **repro})
                break
    return result


_RUNNERS = {
    "cor25": suite_cor25,
    "antican2": suite_antican2,
    "caseline": suite_caseline,
    "pmin-oracle": suite_pmin_oracle,
    "scaling": suite_scaling,
    "smoothfan": suite_smoothfan,
}


def run_suites(names, trials: Optional[int], seed: int) -> list[SuiteResult]:
    results = []
    for name in names:
        n = DEFAULT_TRIALS[name] if trials is None else trials
        results.append(_RUNNERS[name](n, seed))
    return results
