"""Type-A flag varieties and their Chow-ring presentations.

``FlagVariety(n, dims)`` models the variety of nested subspaces
``V_{d_1} < ... < V_{d_s}`` of ``C^{n+1}``.  Its Chow ring is generated by
``X_1..X_{d_s}``, symmetric inside each block
``X_{d_{l-1}+1}..X_{d_l}``, modulo the complete homogeneous polynomials
``h_i(X_1..X_{d_s})`` for ``n+2-d_s <= i <= n+1``.

Blockwise-symmetric polynomials are rewritten in the block generators
``e_{l,t}`` (the degree-``t`` elementary polynomial of block ``l``), which
carry weight ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple

from .errors import DomainError, NotBlockSymmetricError
from .polyring import DEFAULT_RING, Polynomial, Ring, series_invert, truncate
from .symmetric import complete_homogeneous, elementary


@dataclass(frozen=True)
class FlagVariety:
    n: int
    dims: tuple

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if self.n < 1:
            raise DomainError(f"rank n must be at least 1, got {self.n}")
        if not dims:
            raise DomainError("a flag variety needs at least one marked dimension")
        if any(b <= a for a, b in zip(dims, dims[1:])):
            raise DomainError(f"dims must be strictly increasing, got {list(dims)}")
        if dims[0] < 1 or dims[-1] > self.n:
            raise DomainError(f"dims must lie in 1..{self.n}, got {list(dims)}")

    @classmethod
    def from_complement_run(cls, n: int, m: int, i: int) -> "FlagVariety":
        """The variety whose unmarked dimensions are exactly ``i, ..., i+m-3``."""
        form = ConsecutiveComplementForm(n, m, i)
        return cls(n, tuple(d for d in range(1, n + 1) if d not in form.complement))

    @classmethod
    def from_json(cls, data: dict) -> "FlagVariety":
        if "dims" in data:
            return cls(int(data["n"]), tuple(data["dims"]))
        return cls.from_complement_run(int(data["n"]), int(data["m"]), int(data["i"]))

    def to_json(self) -> dict:
        return {"n": self.n, "dims": list(self.dims)}

    @property
    def complement(self) -> tuple:
        marked = set(self.dims)
        return tuple(d for d in range(1, self.n + 1) if d not in marked)

    @property
    def blocks(self) -> tuple:
        """Variable indices of each block, e.g. ``((1,), (2, 3, 4))`` for ``P(1, 4)``."""
        out, prev = [], 0
        for d in self.dims:
            out.append(tuple(range(prev + 1, d + 1)))
            prev = d
        return tuple(out)

    def __str__(self):
        return f"A_{self.n}/P({','.join(map(str, self.dims))})"


@dataclass(frozen=True)
class ConsecutiveComplementForm:
    n: int
    m: int
    i: int

    def __post_init__(self):
        if self.m < 2:
            raise DomainError(f"m must be at least 2, got {self.m}")
        if self.i < 1 or self.i + self.m - 3 > self.n:
            raise DomainError(
                f"run {self.i}..{self.i + self.m - 3} does not fit inside 1..{self.n}")
        if self.m - 2 >= self.n:
            raise DomainError("the complement run would leave no marked dimension")

    @property
    def complement(self) -> tuple:
        return tuple(range(self.i, self.i + self.m - 2))

    def flag_variety(self) -> FlagVariety:
        return FlagVariety.from_complement_run(self.n, self.m, self.i)


class RunInfo(NamedTuple):
    is_single_run: bool
    max_run_length: int
    start: int | None


def consecutive_run(n: int, marked: Iterable[int]) -> RunInfo:
    """Describe the runs of consecutive integers in ``{1..n}`` minus ``marked``."""
    marked = set(marked)
    if not marked <= set(range(1, n + 1)):
        raise DomainError(f"marked set {sorted(marked)} is not inside 1..{n}")
    runs: list[list[int]] = []
    for d in range(1, n + 1):
        if d in marked:
            continue
        if runs and runs[-1][-1] == d - 1:
            runs[-1].append(d)
        else:
            runs.append([d])
    if not runs:
        return RunInfo(True, 0, None)
    longest = max(len(r) for r in runs)
    if len(runs) == 1:
        return RunInfo(True, longest, runs[0][0])
    return RunInfo(False, longest, None)


def dualize(fv: FlagVariety) -> FlagVariety:
    return FlagVariety(fv.n, tuple(sorted(fv.n + 1 - d for d in fv.dims)))


# presentation --------------------------------------------------------------

@dataclass(frozen=True)
class ChowPresentation:
    fv: FlagVariety

    @property
    def variables(self) -> tuple:
        return tuple(range(1, self.fv.dims[-1] + 1))

    @property
    def provenance(self) -> str:
        return "X_i = c_1((H_i/H_{i-1})^dual), H_i the i-th universal subbundle"

    @property
    def blocks(self) -> tuple:
        return self.fv.blocks

    @property
    def relation_degrees(self) -> tuple:
        n, top = self.fv.n, self.fv.dims[-1]
        return tuple(range(n + 2 - top, n + 2))

    def relation(self, i: int) -> Polynomial:
        if i not in self.relation_degrees:
            raise DomainError(f"h_{i} is not among the relations of {self.fv}")
        return complete_homogeneous(i, self.fv.dims[-1])

    @cached_property
    def relations(self) -> tuple:
        return tuple(self.relation(i) for i in self.relation_degrees)

    def to_json(self) -> dict:
        return {
            "flag": self.fv.to_json(),
            "variables": [f"X{v}" for v in self.variables],
            "provenance": self.provenance,
            "blocks": [[f"X{v}" for v in b] for b in self.blocks],
            "relation_degrees": list(self.relation_degrees),
            "relations": [f"h_{i}(X1..X{self.fv.dims[-1]})" for i in self.relation_degrees],
        }


def presentation(fv: FlagVariety) -> ChowPresentation:
    return ChowPresentation(fv)


# block generators -----------------------------------------------------------

class BlockGenerator(NamedTuple):
    block: int   # 1-based
    degree: int

    @property
    def weight(self) -> int:
        return self.degree

    @property
    def name(self) -> str:
        return f"e{self.block}_{self.degree}"


@dataclass(frozen=True)
class BlockRing:
    """Polynomial ring in the block generators of a flag variety.

    Generator ``k`` of :attr:`generators` is ring variable ``k``.
    """

    fv: FlagVariety

    @cached_property
    def generators(self) -> tuple:
        return tuple(BlockGenerator(l, t)
                     for l, block in enumerate(self.fv.blocks, start=1)
                     for t in range(1, len(block) + 1))

    @cached_property
    def ring(self) -> Ring:
        return Ring(weights={k: g.weight for k, g in enumerate(self.generators)},
                    names={k: g.name for k, g in enumerate(self.generators)})

    @cached_property
    def index(self) -> dict:
        return {g: k for k, g in enumerate(self.generators)}

    def gen(self, block: int, degree: int) -> Polynomial:
        return self.ring.var(self.index[BlockGenerator(block, degree)])

    def block_series(self, block: int, sign: int = 1) -> Polynomial:
        """``1 + sum_t sign^t e_{block,t}``: the block's elementary generating
        function, with the series variable absorbed into the weights."""
        size = len(self.fv.blocks[block - 1])
        p = self.ring.one
        for t in range(1, size + 1):
            p = p + self.gen(block, t).scale(sign ** t)
        return p

    def prefix_elementary_series(self, upto_block: int) -> Polynomial:
        p = self.ring.one
        for l in range(1, upto_block + 1):
            p = p * self.block_series(l)
        return p

    def complete_series(self, bound: int) -> Polynomial:
        """All ``h_i(X_1..X_{d_s})`` for ``i <= bound``, one per weighted degree."""
        p = self.ring.one
        for l in range(1, len(self.fv.blocks) + 1):
            p = truncate(p * self.block_series(l, -1), bound)
        return series_invert(p, bound)

    def expand(self, q: Polynomial) -> Polynomial:
        """Substitute each ``e_{l,t}`` by its elementary polynomial in the X's."""
        if q.ring != self.ring:
            raise DomainError("polynomial is not over this block ring")
        el = {k: elementary(g.degree, variables=self.fv.blocks[g.block - 1])
              for k, g in enumerate(self.generators)}
        out = DEFAULT_RING.zero
        for m, c in q.terms.items():
            t = DEFAULT_RING.const(c)
            for v, e in m:
                t = t * el[v] ** e
            out = out + t
        return out


@lru_cache(maxsize=256)
def block_ring(fv: FlagVariety) -> BlockRing:
    return BlockRing(fv)


def complete_in_blocks(fv: FlagVariety, i: int) -> Polynomial:
    """``h_i(X_1..X_{d_s})`` written in block generators via series inversion."""
    return block_ring(fv).complete_series(i).homogeneous_part(i)


def prefix_elementary_in_blocks(fv: FlagVariety, upto_block: int, t: int) -> Polynomial:
    """``e_t(X_1..X_{d_l})`` for ``l = upto_block`` in block generators."""
    return block_ring(fv).prefix_elementary_series(upto_block).homogeneous_part(t)


def _check_block_symmetric(fv: FlagVariety, target: Polynomial):
    top = fv.dims[-1]
    stray = [v for v in target.variables if not 1 <= v <= top]
    if stray:
        raise NotBlockSymmetricError(f"variables {stray} are outside X1..X{top}")
    for block in fv.blocks:
        for a, b in zip(block, block[1:]):
            if target.rename({a: b, b: a}) != target:
                raise NotBlockSymmetricError(
                    f"polynomial is not symmetric under swapping X{a} and X{b}")


def blockify(fv: FlagVariety, target: Polynomial) -> Polynomial:
    """Rewrite a blockwise-symmetric polynomial in the block generators.

    Repeatedly cancels the lexicographically leading monomial against the
    product of block elementary polynomials with the same leading monomial.
    The result is unique and has the same weighted degree.
    """
    _check_block_symmetric(fv, target)
    br = block_ring(fv)
    blocks = fv.blocks
    top = fv.dims[-1]
    el_cache: dict = {}

    def el(l, t):
        if (l, t) not in el_cache:
            el_cache[l, t] = elementary(t, variables=blocks[l - 1])
        return el_cache[l, t]

    result = br.ring.zero
    remaining = target
    while remaining:
        lead, coef = max(remaining.terms.items(),
                         key=lambda item: tuple(dict(item[0]).get(v, 0) for v in range(1, top + 1)))
        exps = dict(lead)
        gen_mono = br.ring.one
        x_poly = DEFAULT_RING.const(coef)
        for l, block in enumerate(blocks, start=1):
            alpha = [exps.get(v, 0) for v in block] + [0]
            for t in range(1, len(block) + 1):
                p = alpha[t - 1] - alpha[t]
                if p < 0:
                    raise NotBlockSymmetricError(f"leading monomial {lead} is not block-dominant")
                if p:
                    gen_mono = gen_mono * br.gen(l, t) ** p
                    x_poly = x_poly * el(l, t) ** p
        result = result + gen_mono.scale(coef)
        remaining = remaining - x_poly
    return result


class SchubertClass(NamedTuple):
    polynomial: Polynomial
    degree: int
    prefix: int  # the class is e_degree(X_1..X_prefix)


def schubert_generators(fv: FlagVariety, degree_cap: int) -> list:
    """The effective classes ``e_t(X_1..X_{d_l})``, ``t <= min(d_l, degree_cap)``,
    deduplicated on the prefix length ``d_l``."""
    if degree_cap < 1:
        raise DomainError("degree cap must be at least 1")
    out, seen = [], set()
    for d in fv.dims:
        for t in range(1, min(d, degree_cap) + 1):
            if (d, t) in seen:
                continue
            seen.add((d, t))
            out.append(SchubertClass(elementary(t, d), t, d))
    return out
