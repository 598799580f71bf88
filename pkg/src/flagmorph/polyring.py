"""Sparse multivariate polynomials with integer coefficients.

A :class:`Polynomial` is an immutable map from monomials to nonzero Python
integers (so coefficients never overflow).  Every polynomial lives in a
:class:`Ring`, which fixes the weight of each variable; the weighted degree
of ``X_i^e`` is ``e * weight(i)``.  Variables are positive or non-negative
integer indices, printed as ``X1, X2, ...`` unless the ring names them.

Terms iterate in a fixed order (lexicographically descending exponent
vectors, smallest variable index most significant), so the text form is
reproducible byte for byte.

    >>> R = Ring()
    >>> x1, x2 = R.var(1), R.var(2)
    >>> str((x1 + x2) * (x1 - x2))
    'X1^2 - X2^2'
    >>> str(series_invert(1 - x1, 3))
    'X1^3 + X1^2 + X1 + 1'
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DomainError, WeightMismatchError

Monomial = tuple  # tuple[tuple[int, int], ...], sorted by variable, exponents > 0

ONE_MONOMIAL: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def make_monomial(exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[int, int] = {}
    for v, e in items:
        if e < 0:
            raise ValueError(f"negative exponent {e} for variable {v}")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class Ring:
    """Grading context shared by the polynomials that may be combined.

    ``weights`` lists variables whose weight differs from 1; ``names``
    optionally overrides the printed name of a variable.
    """

    weights: tuple = ()
    names: tuple = field(default=(), compare=True)

    def __post_init__(self):
        w = self.weights.items() if isinstance(self.weights, Mapping) else self.weights
        w = tuple(sorted((int(v), int(k)) for v, k in w if k != 1))
        for v, k in w:
            if k < 1:
                raise ValueError(f"weight of variable {v} must be positive, got {k}")
        object.__setattr__(self, "weights", w)
        n = self.names.items() if isinstance(self.names, Mapping) else self.names
        object.__setattr__(self, "names", tuple(sorted((int(v), str(s)) for v, s in n)))
        object.__setattr__(self, "_wmap", dict(w))
        object.__setattr__(self, "_nmap", dict(self.names))

    def weight(self, v: int) -> int:
        return self._wmap.get(v, 1)

    def name(self, v: int) -> str:
        return self._nmap.get(v, f"X{v}")

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * self._wmap.get(v, 1) for v, e in m)

    def var(self, v: int) -> "Polynomial":
        return Polynomial({((v, 1),): 1}, self)

    def const(self, c: int) -> "Polynomial":
        return Polynomial({ONE_MONOMIAL: c}, self)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial({}, self)

    @property
    def one(self) -> "Polynomial":
        return self.const(1)


DEFAULT_RING = Ring()


class Polynomial:
    __slots__ = ("_terms", "_ring", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, ring: Ring = DEFAULT_RING):
        clean = {}
        for m, c in (terms or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {type(c).__name__}")
            if c:
                clean[m] = c
        self._terms = clean
        self._ring = ring
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, ring: Ring) -> "Polynomial":
        # terms already canonical: no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._ring = ring
        p._hash = None
        return p

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def variables(self) -> tuple:
        return tuple(sorted({v for m in self._terms for v, _ in m}))

    def constant_term(self) -> int:
        return self._terms.get(ONE_MONOMIAL, 0)

    def degree(self) -> int:
        """Weighted degree; -1 for the zero polynomial."""
        return max((self._ring.mono_degree(m) for m in self._terms), default=-1)

    def homogeneous_part(self, d: int) -> "Polynomial":
        deg = self._ring.mono_degree
        return Polynomial._raw({m: c for m, c in self._terms.items() if deg(m) == d}, self._ring)

    def homogeneous_parts(self) -> dict:
        deg = self._ring.mono_degree
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(deg(m), {})[m] = c
        return {d: Polynomial._raw(t, self._ring) for d, t in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len({self._ring.mono_degree(m) for m in self._terms}) <= 1

    def sorted_terms(self) -> list:
        vs = self.variables
        def key(item):
            e = dict(item[0])
            return tuple(-e.get(v, 0) for v in vs)
        return sorted(self._terms.items(), key=key)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._ring != self._ring:
                raise WeightMismatchError(
                    f"cannot combine polynomials over different rings: {self._ring} vs {other._ring}")
            return other
        if isinstance(other, int):
            return self._ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self._ring)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self._ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c}, self._ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = self._ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        return Polynomial({m: c * v for m, v in self._terms.items()}, self._ring)

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({ONE_MONOMIAL: other} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._ring == other._ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._terms.items())))
        return self._hash

    # substitution ---------------------------------------------------------

    def evaluate(self, point: Mapping[int, int]) -> int:
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                try:
                    t *= point[v] ** e
                except KeyError:
                    raise DomainError(f"no value assigned to variable {self._ring.name(v)}") from None
            total += t
        return total

    __call__ = evaluate

    def rename(self, mapping: Mapping[int, int], ring: Ring | None = None) -> "Polynomial":
        """Relabel variables by ``mapping`` (variables not listed are kept)."""
        out: dict = {}
        for m, c in self._terms.items():
            nm = make_monomial((mapping.get(v, v), e) for v, e in m)
            out[nm] = out.get(nm, 0) + c
        return Polynomial(out, ring or self._ring)

    def change_ring(self, ring: Ring) -> "Polynomial":
        return Polynomial._raw(dict(self._terms), ring)

    # text -----------------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        name = self._ring.name
        pieces = []
        for m, c in self.sorted_terms():
            factors = [name(v) if e == 1 else f"{name(v)}^{e}" for v, e in m]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    try:
        f = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    if p.ring != q.ring:
        raise WeightMismatchError("polynomials carry different weight assignments")
    return f(p, q)


def evaluate(p: Polynomial, point: Mapping[int, int]) -> int:
    return p.evaluate(point)


def truncate(p: Polynomial, bound) -> Polynomial:
    """Drop every term of weighted degree above ``bound``."""
    if bound < 0:
        raise ValueError("degree bound must be non-negative")
    deg = p.ring.mono_degree
    return Polynomial._raw({m: c for m, c in p.terms.items() if deg(m) <= bound}, p.ring)


def series_invert(p: Polynomial, bound: int) -> Polynomial:
    """Inverse of ``p`` as a power series, truncated above weighted degree ``bound``.

    Built one homogeneous degree at a time from ``p * q = 1``.  The constant
    term of ``p`` must be a unit of the integers.
    """
    if bound < 0:
        raise ValueError("degree bound must be non-negative")
    c0 = p.constant_term()
    if c0 not in (1, -1):
        raise DomainError(f"series inversion needs constant term +1 or -1, got {c0}")
    parts = p.homogeneous_parts()
    ring = p.ring
    q = [ring.const(c0)]
    for d in range(1, bound + 1):
        acc = ring.zero
        for j in range(1, d + 1):
            pj = parts.get(j)
            if pj is not None and q[d - j]:
                acc = acc + pj * q[d - j]
        q.append(acc.scale(-c0))
    total: dict = {}
    for part in q:
        total.update(part.terms)
    return Polynomial._raw(total, ring)
