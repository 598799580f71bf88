"""Complete homogeneous, elementary and squared-variable symmetric polynomials.

Generators are built by enumerating exponent vectors directly, so the
number of terms can be checked against binomial counts independently of
any recursion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .errors import DomainError, PositivityViolation
from .polyring import DEFAULT_RING, Polynomial, Ring


class SymKind(enum.Enum):
    COMPLETE_HOMOGENEOUS = "CompleteHomogeneous"
    ELEMENTARY = "Elementary"
    SQUARED_COMPLETE = "SquaredComplete"


def _variables(k, variables):
    if variables is None:
        if k < 1:
            raise ValueError("need at least one variable")
        return tuple(range(1, k + 1))
    return tuple(variables)


def complete_homogeneous(u: int, k: int | None = None, *, variables: Sequence[int] | None = None,
                         ring: Ring = DEFAULT_RING, power: int = 1) -> Polynomial:
    """Sum of all degree-``u`` monomials in ``X_1..X_k`` (or in ``variables``).

    ``power`` substitutes ``X_i -> X_i**power`` while enumerating.
    """
    if u < 0:
        raise DomainError(f"degree must be non-negative, got {u}")
    vs = _variables(k, variables)
    terms = {}
    for combo in combinations_with_replacement(vs, u):
        exps: dict[int, int] = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + power
        terms[tuple(sorted(exps.items()))] = 1
    return Polynomial(terms, ring)


def elementary(u: int, k: int | None = None, *, variables: Sequence[int] | None = None,
               ring: Ring = DEFAULT_RING) -> Polynomial:
    """Sum of the squarefree degree-``u`` monomials; zero when ``u`` exceeds the variable count."""
    if u < 0:
        raise DomainError(f"degree must be non-negative, got {u}")
    vs = _variables(k, variables)
    return Polynomial({tuple((v, 1) for v in c): 1 for c in combinations(sorted(vs), u)}, ring)


def q_poly(v: int, k: int | None = None, *, variables: Sequence[int] | None = None,
           ring: Ring = DEFAULT_RING) -> Polynomial:
    """Complete homogeneous polynomial of degree ``v`` in the squared variables."""
    return complete_homogeneous(v, k, variables=variables, ring=ring, power=2)


def generator(kind: SymKind, u: int, k: int) -> Polynomial:
    return {
        SymKind.COMPLETE_HOMOGENEOUS: complete_homogeneous,
        SymKind.ELEMENTARY: elementary,
        SymKind.SQUARED_COMPLETE: q_poly,
    }[kind](u, k)


def claim_decomposition(j: int, k: int) -> Polynomial:
    """``sum over u + 2v = j`` of ``elementary(u, k) * q_poly(v, k)``."""
    total = DEFAULT_RING.zero
    for v in range(j // 2 + 1):
        total = total + elementary(j - 2 * v, k) * q_poly(v, k)
    return total


def claim_check(j: int, k: int) -> bool:
    """True iff the complete homogeneous polynomial of degree ``j`` in ``k``
    variables equals :func:`claim_decomposition` as canonical polynomials."""
    if not 1 <= j <= k:
        raise DomainError(f"need 1 <= j <= k, got j={j}, k={k}")
    return complete_homogeneous(j, k) == claim_decomposition(j, k)


# generating functions, represented as lists of t-coefficients -----------

def series_mul(a: Sequence[Polynomial], b: Sequence[Polynomial], bound: int) -> list:
    out = [DEFAULT_RING.zero] * (bound + 1)
    for i, ai in enumerate(a[: bound + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: bound + 1 - i]):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def complete_series(k: int, bound: int) -> list:
    return [complete_homogeneous(j, k) for j in range(bound + 1)]


def elementary_series(k: int, bound: int, sign: int = 1) -> list:
    return [elementary(u, k).scale(sign ** u) for u in range(bound + 1)]


def squared_series(k: int, bound: int) -> list:
    return [q_poly(d // 2, k) if d % 2 == 0 else DEFAULT_RING.zero for d in range(bound + 1)]


def genfun_check(k: int, bound: int) -> bool:
    """Check the generating-function identities up to ``t**bound``:

    * complete(t) * elementary(-t) == 1
    * elementary(t) * squared(t**2) == complete(t)
    """
    if k < 1 or bound < 1:
        raise DomainError("need k >= 1 and bound >= 1")
    h = complete_series(k, bound)
    unit = [DEFAULT_RING.one] + [DEFAULT_RING.zero] * bound
    if series_mul(h, elementary_series(k, bound, -1), bound) != unit:
        return False
    return series_mul(elementary_series(k, bound), squared_series(k, bound), bound) == h


def newton_alternating_sum(k: int, l: int) -> Polynomial:
    """``sum_{i=0}^{l} (-1)^i e_i h_{l-i}`` in ``k`` variables (zero for l >= 1)."""
    total = DEFAULT_RING.zero
    for i in range(l + 1):
        total = total + (elementary(i, k) * complete_homogeneous(l - i, k)).scale((-1) ** i)
    return total


# numeric evaluation ------------------------------------------------------

def complete_values(a: Sequence[int], upto: int) -> list:
    """``[h_0(a), ..., h_upto(a)]`` by the one-variable-at-a-time recursion."""
    h = [1] + [0] * upto
    for x in a:
        for j in range(1, upto + 1):
            h[j] += x * h[j - 1]
    return h


def elementary_values(a: Sequence[int], upto: int) -> list:
    e = [1] + [0] * upto
    for x in a:
        for j in range(upto, 0, -1):
            e[j] += x * e[j - 1]
    return e


class Certificate(enum.Enum):
    POSITIVE = "Positive"
    ZERO_AT_ORIGIN = "ZeroAtOrigin"


@dataclass(frozen=True)
class PositivityResult:
    value: int
    certificate: Certificate


def even_positivity_oracle(m: int, a: Sequence[int]) -> PositivityResult:
    """Evaluate the degree-``m`` complete homogeneous polynomial at ``a``.

    For even ``m`` this value is non-negative and vanishes only at the
    origin (Tao, 2017).  The function enforces that as a runtime assertion.
    """
    if m < 2 or m % 2:
        raise DomainError(f"degree must be even and at least 2, got {m}")
    value = complete_values(a, m)[m]
    origin = not any(a)
    if value < 0 or (value == 0) != origin:
        raise PositivityViolation(f"complete homogeneous value {value} of degree {m} at {tuple(a)}")
    return PositivityResult(value, Certificate.ZERO_AT_ORIGIN if origin else Certificate.POSITIVE)
