"""Integer constraints induced by a morphism from P^m to a flag variety.

A morphism ``f: P^m -> A_n/P(dims)`` sends each block generator
``e_{l,t}`` to an integer multiple of ``H^t``.  Those integers must kill
every relation of degree at most ``m`` and keep every effective Schubert
class from the prefix elementary polynomials non-negative.  This module
builds that system, searches it exhaustively in a box, replays the
constancy arguments as checkable certificates, and issues verdicts.

Bounded search is evidence, never proof: an empty result only says that
no nonzero assignment exists with entries in ``[-B, B]``.
"""

from __future__ import annotations

import csv
import enum
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .chow import (BlockGenerator, FlagVariety, block_ring, consecutive_run, dualize,
                   presentation)
from .errors import DomainError, HypothesisViolation, SearchSpaceTooLarge
from .polyring import Polynomial, truncate
from .symmetric import complete_values, elementary_values

DEFAULT_BOUND = 4
DEFAULT_CAP = 10 ** 9
THREADS_ENV = "FLAGMORPH_THREADS"


@dataclass(frozen=True)
class Constraint:
    label: str
    degree: int
    polynomial: Polynomial


@dataclass(frozen=True)
class ConstraintSystem:
    fv: FlagVariety
    m: int
    unknowns: tuple          # BlockGenerator, in ring-variable order
    equalities: tuple        # Constraint, each must vanish
    inequalities: tuple      # Constraint, each must be >= 0

    @property
    def names(self) -> list:
        return [g.name for g in self.unknowns]


@dataclass(frozen=True)
class PullbackAssignment:
    generators: tuple
    values: tuple

    def as_dict(self) -> dict:
        return dict(zip(self.generators, self.values))

    def is_zero(self) -> bool:
        return not any(self.values)


def build_system(fv: FlagVariety, m: int) -> ConstraintSystem:
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    br = block_ring(fv)
    unknowns = tuple(g for g in br.generators if g.weight <= m)

    complete = br.complete_series(m)
    equalities = tuple(
        Constraint(f"h{i}", i, complete.homogeneous_part(i))
        for i in presentation(fv).relation_degrees if i <= m)

    inequalities = []
    prefix = br.ring.one
    for l, d in enumerate(fv.dims, start=1):
        prefix = truncate(prefix * br.block_series(l), m)
        for t in range(1, min(d, m) + 1):
            inequalities.append(
                Constraint(f"e{t}[X1..X{d}]", t, prefix.homogeneous_part(t)))
    return ConstraintSystem(fv, m, unknowns, equalities, tuple(inequalities))


# search -------------------------------------------------------------------------

def _term_source(coef: int, factors) -> str:
    parts = [str(coef)] + [f"x[{p}]" if e == 1 else f"x[{p}]**{e}" for p, e in factors]
    return "*".join(parts)


def _compile(sys: ConstraintSystem) -> tuple:
    """Source of one predicate per search depth.

    Depth ``k`` tests the constraints whose deepest unknown is ``k - 1``, so
    each constraint is evaluated as soon as all of its unknowns are fixed:
    equalities before inequalities, lower degree first.
    """
    index = block_ring(sys.fv).index
    pos = {index[g]: k for k, g in enumerate(sys.unknowns)}
    levels: list[list] = [[] for _ in range(len(sys.unknowns) + 1)]
    ordered = ([(c, "== 0") for c in sorted(sys.equalities, key=lambda c: c.degree)]
               + [(c, ">= 0") for c in sorted(sys.inequalities, key=lambda c: c.degree)])
    for c, test in ordered:
        terms, depth = [], 0
        for mono, coef in c.polynomial.sorted_terms():
            factors = [(pos[v], e) for v, e in mono]
            depth = max([depth] + [p + 1 for p, _ in factors])
            terms.append(_term_source(coef, factors))
        levels[depth].append(f"({' + '.join(terms) or '0'}) {test}")
    return tuple(" and ".join(lv) or "True" for lv in levels)


def _predicates(levels: Sequence[str]) -> list:
    # sources are generated above from integer coefficients and indices only
    return [eval(f"lambda x: {src}", {"__builtins__": {}}) for src in levels]


def _search_chunk(levels: Sequence[str], bound: int, g: int, outer: Sequence[int]) -> list:
    checks = _predicates(levels)
    found = []
    x = [0] * g
    values = range(-bound, bound + 1)

    def rec(k):
        if k == g:
            found.append(tuple(x))
            return
        check = checks[k + 1]
        for v in (outer if k == 0 else values):
            x[k] = v
            if check(x):
                rec(k + 1)

    if not checks[0](x):
        return found
    if g == 0:
        return [()]
    rec(0)
    return found


def worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, int(workers))
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None


def search_space_size(sys: ConstraintSystem, bound: int) -> int:
    return (2 * bound + 1) ** len(sys.unknowns)


def bounded_search(sys: ConstraintSystem, bound: int, *, cap: int = DEFAULT_CAP,
                   workers: int | None = None, min_parallel_size: int = 20_000) -> list:
    """Every assignment in ``[-bound, bound]^g`` satisfying the system.

    Results are in lexicographic order of the value tuples whatever the
    number of workers.  Workers split the range of the first unknown.
    """
    if bound < 0:
        raise DomainError("search bound must be non-negative")
    size = search_space_size(sys, bound)
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)
    levels = _compile(sys)
    g = len(sys.unknowns)
    outer = list(range(-bound, bound + 1))
    n_workers = min(worker_count(workers), len(outer))
    if n_workers <= 1 or g == 0 or size < min_parallel_size:
        rows = _search_chunk(levels, bound, g, outer)
    else:
        chunks = [outer[k::n_workers] for k in range(n_workers)]
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            parts = pool.map(_search_chunk, [levels] * n_workers, [bound] * n_workers,
                             [g] * n_workers, chunks)
            rows = sorted(row for part in parts for row in part)
    return [PullbackAssignment(sys.unknowns, r) for r in rows]


def solutions_csv(sys: ConstraintSystem, solutions: Iterable[PullbackAssignment]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(sys.names)
    for s in solutions:
        w.writerow(s.values)
    return buf.getvalue()


# certificates ---------------------------------------------------------------------

def recurrence_sequence(a: int, b1: int, length: int) -> list:
    """``[b_0, ..., b_length]`` with ``b_0 = 1`` and
    ``b_l = b_{l-1} b_1 + b_{l-2} (a^2 + a b_1)``."""
    if length < 1:
        raise DomainError("length must be at least 1")
    c = a * a + a * b1
    b = [1, b1]
    for _ in range(2, length + 1):
        b.append(b[-1] * b1 + b[-2] * c)
    return b


@dataclass
class RecurrenceReport:
    k: int
    a_range: tuple
    b1_range: tuple
    parity_length: int
    points_checked: int = 0
    passed: bool = True
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {
            "k": self.k, "a_range": list(self.a_range), "b1_range": list(self.b1_range),
            "parity_length": self.parity_length, "points_checked": self.points_checked,
            "passed": self.passed, "counterexample": self.counterexample,
        }


def recurrence_certificate(k: int, a_max: int = 6, b1_max: int = 6,
                           parity_length: int = 10) -> RecurrenceReport:
    """Replay the even two-step argument for ``A_{2k}/P(1, 2k)`` on a box.

    For every ``0 <= a <= a_max``, ``|b_1| <= b1_max`` with ``a + b_1 >= 0``:

    * odd ``l``: ``b_1 b_l >= 0``; even ``l``: ``b_l >= 0`` (``l <= parity_length``);
    * ``b_{2k} = 0`` splits into ``b_{2k-1} b_1 = 0 = b_{2k-2}(a^2 + a b_1)``
      and forces ``a = b_1 = 0``.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    top = max(2 * k, parity_length)
    rep = RecurrenceReport(k, (0, a_max), (-b1_max, b1_max), parity_length)

    def fail(a, b1, why):
        rep.passed = False
        rep.counterexample = {"a": a, "b1": b1, "violation": why}

    for a in range(0, a_max + 1):
        for b1 in range(-b1_max, b1_max + 1):
            if a + b1 < 0:
                continue
            rep.points_checked += 1
            b = recurrence_sequence(a, b1, top)
            for l in range(1, parity_length + 1):
                ok = b1 * b[l] >= 0 if l % 2 else b[l] >= 0
                if not ok:
                    fail(a, b1, f"parity fact fails at l={l}")
                    return rep
            if b[2 * k] == 0:
                c = a * a + a * b1
                if b[2 * k - 1] * b1 != 0 or b[2 * k - 2] * c != 0:
                    fail(a, b1, "b_2k = 0 does not split into two vanishing terms")
                    return rep
                if a or b1:
                    fail(a, b1, "b_2k = 0 at a nonzero point")
                    return rep
    return rep


@dataclass
class OddCaseTrace:
    point: tuple
    m: int
    steps: list = field(default_factory=list)
    conclusion: str = ""
    passed: bool = False

    def to_json(self) -> dict:
        return {"point": list(self.point), "m": self.m, "steps": self.steps,
                "conclusion": self.conclusion, "passed": self.passed}


def odd_case_certificate(a: Sequence[int], m: int) -> OddCaseTrace:
    """Replay the odd-degree cascade that forces a root tuple to vanish.

    Premises (re-checked): ``h_m(a) = 0`` and ``e_u(a) >= 0`` for ``1 <= u <= m``.
    """
    a = tuple(int(x) for x in a)
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and at least 3, got {m}")
    h = complete_values(a, m)
    e = elementary_values(a, m)
    sq = complete_values([x * x for x in a], m)  # sq[v] = Q_v(a)
    if h[m] != 0:
        raise HypothesisViolation(f"h_{m}(a) = {h[m]} is not zero")
    bad = [u for u in range(1, m + 1) if e[u] < 0]
    if bad:
        raise HypothesisViolation(f"e_{bad[0]}(a) = {e[bad[0]]} is negative")

    tr = OddCaseTrace(a, m)
    products = {(m - 2 * v, v): e[m - 2 * v] * sq[v] for v in range(m // 2 + 1)}
    if sum(products.values()) != h[m]:
        tr.conclusion = "decomposition of h_m does not match"
        return tr
    tr.steps.append(f"h_{m}(a) = sum of e_u(a)*Q_v(a) over u+2v={m}, each term >= 0, total 0")
    if any(products.values()):
        tr.conclusion = "a nonnegative decomposition term is nonzero"
        return tr
    tr.steps.append("every product e_u(a)*Q_v(a) vanishes")
    v = (m - 1) // 2
    if sq[v] == 0:
        tr.steps.append(f"Q_{v}(a) = 0, a sum of even powers, so every entry is 0")
    elif e[1] == 0:
        h2 = complete_values(a, 2)[2]
        tr.steps.append("e_1(a) = 0, so h_2(a) + e_2(a) = e_1(a)^2 = 0")
        if h2 + e[2] != 0 or h2 < 0:
            tr.conclusion = "h_2 + e_2 identity failed"
            return tr
        tr.steps.append("e_2(a) >= 0 and h_2(a) >= 0 give h_2(a) = 0, so every entry is 0")
    else:
        tr.conclusion = f"e_1(a)*Q_{v}(a) = 0 with both factors nonzero"
        return tr
    if any(a):
        tr.conclusion = "cascade ended at a nonzero tuple"
        return tr
    tr.conclusion = "a = 0"
    tr.passed = True
    return tr


# verdicts ---------------------------------------------------------------------------

class Outcome(enum.Enum):
    CONSTANT = "ConstantByTheorem"
    NONCONSTANT = "NonconstantExists"
    UNKNOWN = "Unknown"


# reason tags
INITIAL_SEGMENT = "constant:initial-segment-flag"
FINAL_SEGMENT = "constant:final-segment-flag"
EVEN_TWO_STEP = "constant:even-two-step-flag"
SYMPLECTIC_FIBER = "nonconstant:symplectic-fiber-map"
COVERED_BY_LINES = "constant:source-covered-by-projective-spaces"
OPEN_EVEN_INTERIOR = "open:even-interior-run"
OPEN_LONG_RUN = "open:source-run-too-long"


@dataclass(frozen=True)
class SearchEvidence:
    bound: int
    unknowns: tuple
    solutions: tuple

    def to_json(self) -> dict:
        return {"bound": self.bound, "unknowns": list(self.unknowns),
                "solutions": [list(s) for s in self.solutions]}


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: str
    evidence: SearchEvidence | None = None

    def to_json(self) -> dict:
        return {"outcome": self.outcome.value, "reason": self.reason,
                "evidence": None if self.evidence is None else self.evidence.to_json()}


def complement_run_start(n: int, m: int, marked: Iterable[int]) -> int:
    """Start ``i`` of the complement run ``{i..i+m-3}``; rejects other shapes."""
    marked = sorted(set(marked))
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    if not marked:
        raise DomainError("the marked set is empty")
    info = consecutive_run(n, marked)
    if not info.is_single_run or info.max_run_length != m - 2:
        raise DomainError(
            f"complement of {marked} in 1..{n} is not one run of length {m - 2}")
    # an empty complement is the run i..i-1 for every i; i = 1 is the natural reading
    return 1 if info.start is None else info.start


def decide_pm_to_flag(n: int, m: int, marked: Iterable[int], *, search: bool = True,
                      bound: int = DEFAULT_BOUND, cap: int = DEFAULT_CAP,
                      workers: int | None = None) -> Verdict:
    marked = tuple(sorted(set(marked)))
    i = complement_run_start(n, m, marked)
    if i == 1:
        return Verdict(Outcome.CONSTANT, INITIAL_SEGMENT)
    if i == n - m + 3:
        return Verdict(Outcome.CONSTANT, FINAL_SEGMENT)
    if i == 2 and n == m and m % 2 == 0:
        return Verdict(Outcome.CONSTANT, EVEN_TWO_STEP)
    if m % 2 == 1:
        return Verdict(Outcome.NONCONSTANT, SYMPLECTIC_FIBER)
    evidence = None
    if search:
        sys = build_system(FlagVariety(n, marked), m)
        sols = bounded_search(sys, bound, cap=cap, workers=workers)
        evidence = SearchEvidence(bound, tuple(sys.names), tuple(s.values for s in sols))
    return Verdict(Outcome.UNKNOWN, OPEN_EVEN_INTERIOR, evidence)


def decide_run(n: int, m: int, i: int, **kwargs) -> Verdict:
    return decide_pm_to_flag(n, m, FlagVariety.from_complement_run(n, m, i).dims, **kwargs)


def decide_flag_to_flag(source: tuple, target: tuple) -> Verdict:
    """``source = (rank, J)`` names ``A_rank/P(J)``; ``target = (n, m, I)``.

    The target must be one of the constant cases for ``P^m``.  A source
    whose unmarked set has no run longer than ``m - 1`` is covered by
    copies of ``P^m``, so every morphism from it is constant.
    """
    rank, J = source
    n, m, I = target
    J = sorted(set(J))
    if not J or J[0] < 1 or J[-1] > rank:
        raise DomainError(f"source marked set {J} must be a nonempty subset of 1..{rank}")
    v = decide_pm_to_flag(n, m, I, search=False)
    if v.outcome is not Outcome.CONSTANT:
        raise DomainError(f"target is not a constant case for P^{m} ({v.reason})")
    if consecutive_run(rank, J).max_run_length <= m - 1:
        return Verdict(Outcome.CONSTANT, COVERED_BY_LINES)
    return Verdict(Outcome.UNKNOWN, OPEN_LONG_RUN)


def duality_consistency(n: int, m: int, marked: Iterable[int]) -> bool:
    fv = FlagVariety(n, tuple(marked))
    a = decide_pm_to_flag(n, m, fv.dims, search=False)
    b = decide_pm_to_flag(n, m, dualize(fv).dims, search=False)
    return a.outcome is b.outcome


def valid_runs(n_max: int, m_max: int):
    """All ``(n, m, i)`` with a consecutive complement run and a nonempty marked set."""
    for n in range(1, n_max + 1):
        for m in range(2, min(m_max, n + 1) + 1):
            # m = 2 leaves the complement empty, which every i describes
            for i in (range(1, n - m + 4) if m > 2 else (1,)):
                yield n, m, i
