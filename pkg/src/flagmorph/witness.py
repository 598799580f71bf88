"""Explicit nonconstant morphisms from odd-dimensional projective spaces.

On ``C^{2k+2}`` with a symplectic form ``J`` every line ``L`` lies in its
orthogonal hyperplane ``L^perp``, so ``L -> (L, L^perp, V)`` is a
nonconstant morphism ``P^{2k+1} -> A_{2k+1}/P(1, 2k+1)``.  Placing that
construction in the coordinates ``e_{i-1}..e_{i+m-1}`` of ``C^{n+1}``, with
every other subspace taken from the standard coordinate flag, gives a
nonconstant morphism ``P^m -> A_n/P(I_i)`` for odd ``m``.

All arithmetic is exact; containments are certified by rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .chow import FlagVariety
from .errors import DomainError


def standard_form(k: int) -> tuple:
    """The block form on ``2k+2`` coordinates: ``J[2t-1][2t] = 1``, ``J[2t][2t-1] = -1``."""
    if k < 0:
        raise DomainError("k must be non-negative")
    size = 2 * k + 2
    rows = [[0] * size for _ in range(size)]
    for t in range(0, size, 2):
        rows[t][t + 1] = 1
        rows[t + 1][t] = -1
    return tuple(tuple(r) for r in rows)


def check_form(form: Sequence[Sequence]) -> None:
    size = len(form)
    if size % 2 or any(len(r) != size for r in form):
        raise DomainError("a symplectic form needs an even-sized square matrix")
    if any(form[a][b] != -form[b][a] for a in range(size) for b in range(size)):
        raise DomainError("form is not alternating")
    if linalg.determinant(form) == 0:
        raise DomainError("form is degenerate")


@dataclass(frozen=True)
class SymplecticWitness:
    line: linalg.Vector
    covector: linalg.Vector  # x^T J; its kernel is L^perp

    def hyperplane_basis(self) -> list:
        return linalg.kernel([self.covector])


def covector(x: Sequence, form: Sequence[Sequence]) -> linalg.Vector:
    return linalg.vec_mat(linalg.vec(x), form)


def symplectic_witness(k: int, x: Sequence, form: Sequence[Sequence] | None = None) -> SymplecticWitness:
    x = linalg.vec(x)
    if len(x) != 2 * k + 2:
        raise DomainError(f"point must have {2 * k + 2} coordinates, got {len(x)}")
    if not any(x):
        raise DomainError("the zero vector is not a point of projective space")
    if form is None:
        form = standard_form(k)
    else:
        check_form(form)
    return SymplecticWitness(x, covector(x, form))


@dataclass(frozen=True)
class FlagPoint:
    dims: tuple
    bases: tuple  # one tuple of basis vectors per subspace

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "bases": [[[[x.numerator, x.denominator] for x in v] for v in basis]
                      for basis in self.bases],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FlagPoint":
        bases = tuple(tuple(tuple(Fraction(int(num), int(den)) for num, den in v) for v in basis)
                      for basis in data["bases"])
        return cls(tuple(int(d) for d in data["dims"]), bases)


def _unit(size: int, j: int) -> linalg.Vector:
    return tuple(Fraction(1 if t == j else 0) for t in range(size))


def _check_fiber_params(n: int, i: int, m: int):
    if m < 3 or m % 2 == 0:
        raise DomainError(f"m must be odd and at least 3, got {m}")
    if not 1 < i < n - m + 3:
        raise DomainError(f"need 1 < i < n - m + 3 = {n - m + 3}, got i={i}")


def embed_in_fiber(n: int, i: int, m: int, x: Sequence,
                   form: Sequence[Sequence] | None = None) -> FlagPoint:
    """Image of ``[x] in P^m`` in ``A_n/P(I_i)``, ``I_i = {1..i-1} u {i+m-2..n}``."""
    _check_fiber_params(n, i, m)
    w = symplectic_witness((m - 1) // 2, x, form)
    size = n + 1
    offset = i - 2  # slot coordinate 0 is ambient coordinate e_{i-1}

    def lift(u):
        v = [Fraction(0)] * size
        v[offset:offset + len(u)] = u
        return tuple(v)

    def std(d):
        return [_unit(size, j) for j in range(d)]

    dims = FlagVariety.from_complement_run(n, m, i).dims
    bases = []
    for d in dims:
        if d == i - 1:
            bases.append(tuple(std(i - 2) + [lift(w.line)]))
        elif d == i + m - 2:
            bases.append(tuple(std(i - 2) + [lift(u) for u in w.hyperplane_basis()]))
        else:
            bases.append(tuple(std(d)))
    return FlagPoint(dims, tuple(bases))


def verify_flag_point(fv: FlagVariety, p: FlagPoint) -> bool:
    """Every member has the stated dimension and each one sits inside the next."""
    if tuple(p.dims) != fv.dims or len(p.bases) != len(fv.dims):
        return False
    for d, basis in zip(p.dims, p.bases):
        if len(basis) != d or any(len(v) != fv.n + 1 for v in basis):
            return False
        if linalg.rank(basis) != d:
            return False
    for small, big in zip(p.bases, p.bases[1:]):
        if linalg.rank(list(big) + list(small)) != len(big):
            return False
    return True


def same_flag(p: FlagPoint, q: FlagPoint) -> bool:
    return p.dims == q.dims and all(linalg.same_span(a, b) for a, b in zip(p.bases, q.bases))


def fiber_parameters(k: int) -> tuple:
    """``(n, i, m)`` for which the fiber map is the bare symplectic map on ``C^{2k+2}``."""
    return 2 * k + 1, 2, 2 * k + 1


def nonconstancy_check(n: int, i: int, m: int,
                       mapping: Callable[[Sequence], FlagPoint] | None = None) -> bool:
    """True iff the slot points ``e_1`` and ``e_3`` map to different flags."""
    if mapping is None:
        _check_fiber_params(n, i, m)
        mapping = lambda x: embed_in_fiber(n, i, m, x)  # noqa: E731
    p = mapping(_unit(m + 1, 0))
    q = mapping(_unit(m + 1, 2))
    return not same_flag(p, q)


def random_point(rng: random.Random, size: int, bound: int = 9) -> linalg.Vector:
    while True:
        x = tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(size))
        if any(x):
            return x


@dataclass
class BatchReport:
    n: int
    i: int
    m: int
    samples: int
    seed: int
    flags_valid: int = 0
    standard_members_fixed: int = 0
    linear: int = 0
    projective: int = 0
    nonconstant: bool = False

    @property
    def passed(self) -> bool:
        return (self.flags_valid == self.standard_members_fixed == self.linear
                == self.projective == self.samples) and self.nonconstant

    def to_json(self) -> dict:
        return {"n": self.n, "i": self.i, "m": self.m, "samples": self.samples,
                "seed": self.seed, "flags_valid": self.flags_valid,
                "standard_members_fixed": self.standard_members_fixed,
                "linear": self.linear, "projective": self.projective,
                "nonconstant": self.nonconstant, "passed": self.passed}


def verify_batch(n: int, i: int, m: int, samples: int = 100, seed: int = 0) -> BatchReport:
    """Check the fiber map on ``samples`` seeded random rational points."""
    _check_fiber_params(n, i, m)
    rng = random.Random(seed)
    fv = FlagVariety.from_complement_run(n, m, i)
    form = standard_form((m - 1) // 2)
    rep = BatchReport(n, i, m, samples, seed)
    moving = {i - 1, i + m - 2}
    for _ in range(samples):
        x = random_point(rng, m + 1)
        y = random_point(rng, m + 1)
        c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))

        p = embed_in_fiber(n, i, m, x)
        if verify_flag_point(fv, p):
            rep.flags_valid += 1
        fixed = all(basis == tuple(_unit(n + 1, j) for j in range(d))
                    for d, basis in zip(p.dims, p.bases) if d not in moving)
        rep.standard_members_fixed += fixed

        cx, cy = covector(x, form), covector(y, form)
        additive = covector([a + b for a, b in zip(x, y)], form) == tuple(a + b for a, b in zip(cx, cy))
        homogeneous = covector([c * a for a in x], form) == tuple(c * a for a in cx)
        isotropic = linalg.dot(x, cx) == 0
        rep.linear += additive and homogeneous and isotropic

        rep.projective += same_flag(p, embed_in_fiber(n, i, m, [c * a for a in x]))
    rep.nonconstant = nonconstancy_check(n, i, m)
    return rep
