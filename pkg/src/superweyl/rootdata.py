"""Root data of quasireductive supergroups and their gamma-polarizations.

A :class:`RootDatum` records the even and odd roots (odd roots with
multiplicities), the coroots of the even roots, and the bracket of the odd
part of the Cartan subalgebra.  Choosing a linear functional ``gamma`` on the
root lattice splits the roots into positive and negative halves; the result
is a :class:`PolarizedDatum`, which carries the rho vectors and answers the
dominance, ordering and parabolic questions.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from sympy import isprime

from .errors import (
    GammaVanishesOnRoot,
    GroupTooLarge,
    InvalidCharacteristic,
    InvalidGroupSpec,
    RankMismatch,
)
from .laurent import HalfWeight

DEFAULT_WEYL_CAP = 10**6

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Even/odd roots, coroots and odd-Cartan structure constants.

    ``odd_cartan_bracket[(t, s)]`` is the integer vector ``c`` with
    ``[K_t, K_s] = sum_i c[i] H_i``, where ``lambda(H_i)`` is the i-th
    coordinate of ``lambda``.  Missing pairs are zero.
    """

    name: str
    rank: int
    even_roots: tuple[HalfWeight, ...]
    coroot: Mapping[HalfWeight, tuple[int, ...]]
    odd_roots: Mapping[HalfWeight, int]
    simple_even_roots: tuple[HalfWeight, ...]
    odd_cartan_dim: int = 0
    odd_cartan_bracket: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        even = set(self.even_roots)
        for a in self.even_roots:
            if a.rank != self.rank:
                raise RankMismatch(f"root {a} has rank {a.rank}")
            if a.is_zero() or not a.is_integral():
                raise ValueError(f"bad even root {a}")
            if -a not in even:
                raise ValueError(f"even roots not symmetric: {-a} missing")
            cv = self.coroot.get(a)
            if cv is None or len(cv) != self.rank:
                raise ValueError(f"missing coroot for {a}")
            if a.pair(cv) != 2:
                raise ValueError(f"<{a}, coroot> != 2")
        for d, m in self.odd_roots.items():
            if d.rank != self.rank or d.is_zero():
                raise ValueError(f"bad odd root {d}")
            if m < 1:
                raise ValueError(f"odd root {d} has multiplicity {m}")
        if not set(self.simple_even_roots) <= even:
            raise ValueError("simple roots must be even roots")
        for (t, s), c in self.odd_cartan_bracket.items():
            if not (0 <= t < self.odd_cartan_dim and 0 <= s < self.odd_cartan_dim):
                raise ValueError(f"bracket index {(t, s)} out of range")
            if len(c) != self.rank:
                raise RankMismatch("bracket vector has wrong length")
            if tuple(self.odd_cartan_bracket.get((s, t), (0,) * self.rank)) != tuple(c):
                raise ValueError(f"odd Cartan bracket is not symmetric at {(t, s)}")

    @property
    def h1_nonzero(self) -> bool:
        """Whether the odd Cartan part is nonzero, i.e. whether 0 is a root."""
        return self.odd_cartan_dim > 0

    def bracket(self, t: int, s: int) -> tuple[int, ...]:
        return tuple(self.odd_cartan_bracket.get((t, s), (0,) * self.rank))

    @property
    def total_odd_multiplicity(self) -> int:
        return sum(self.odd_roots.values())

    @cached_property
    def weyl_group(self) -> list[WeylElement]:
        return _enumerate_weyl(self, DEFAULT_WEYL_CAP)


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    sign: int
    length: int

    def act(self, w: HalfWeight) -> HalfWeight:
        return HalfWeight(_matvec(self.matrix, w.doubled))


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _matvec(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def reflection_matrix(alpha: HalfWeight, coroot: Sequence[int]) -> Matrix:
    """Matrix of ``mu -> mu - <mu, coroot> alpha`` in the lambda_i basis."""
    a = alpha.integer_coords()
    n = len(a)
    return tuple(
        tuple((1 if i == j else 0) - a[i] * coroot[j] for j in range(n)) for i in range(n)
    )


def _enumerate_weyl(datum: RootDatum, cap: int) -> list[WeylElement]:
    n = datum.rank
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = [reflection_matrix(a, datum.coroot[a]) for a in datum.simple_even_roots]
    depth = {ident: 0}
    order = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = _matmul(s, g)
            if h not in depth:
                depth[h] = depth[g] + 1
                if len(depth) > cap:
                    raise GroupTooLarge(f"Weyl group exceeds {cap} elements")
                order.append(h)
                queue.append(h)
    return [WeylElement(m, (-1) ** depth[m], depth[m]) for m in order]


def weyl_elements(pd: PolarizedDatum | RootDatum, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    """All Weyl group elements with sign ``(-1)^length``.

    Lengths come from a breadth-first search over words in the simple
    reflections, so ``length`` is the Coxeter length.
    """
    datum = pd.datum if isinstance(pd, PolarizedDatum) else pd
    if cap == DEFAULT_WEYL_CAP:
        return datum.weyl_group
    return _enumerate_weyl(datum, cap)


# ---------------------------------------------------------------- builders


def _diff(rank: int, i: int, j: int) -> HalfWeight:
    d = [0] * rank
    d[i] += 2
    d[j] -= 2
    return HalfWeight(tuple(d))


def _sum(rank: int, i: int, j: int, sign: int = 1) -> HalfWeight:
    d = [0] * rank
    d[i] += 2 * sign
    d[j] += 2 * sign
    return HalfWeight(tuple(d))


def _type_a_block(rank: int, idx: Sequence[int]):
    roots, coroots = [], {}
    for i in idx:
        for j in idx:
            if i != j:
                a = _diff(rank, i, j)
                roots.append(a)
                coroots[a] = tuple(x // 2 for x in a.doubled)
    simple = [_diff(rank, idx[k], idx[k + 1]) for k in range(len(idx) - 1)]
    return roots, coroots, simple


def general_linear(m: int, n: int) -> RootDatum:
    if m < 1 or n < 1:
        raise InvalidGroupSpec(f"GL(m|n) needs m, n >= 1, got ({m}, {n})")
    rank = m + n
    r1, c1, s1 = _type_a_block(rank, range(m))
    r2, c2, s2 = _type_a_block(rank, range(m, m + n))
    odd = {}
    for i in range(m):
        for j in range(m, m + n):
            odd[_diff(rank, i, j)] = 1
            odd[_diff(rank, j, i)] = 1
    return RootDatum(
        name=f"GL({m}|{n})",
        rank=rank,
        even_roots=tuple(sorted(r1 + r2)),
        coroot={**c1, **c2},
        odd_roots=odd,
        simple_even_roots=tuple(s1 + s2),
    )


def queer(n: int) -> RootDatum:
    """Q(n), with ``[K_t, K_s] = 2 delta_ts H_t``."""
    if n < 1:
        raise InvalidGroupSpec(f"Q(n) needs n >= 1, got {n}")
    roots, coroots, simple = _type_a_block(n, range(n))
    odd = {a: 1 for a in roots}
    bracket = {}
    for t in range(n):
        v = [0] * n
        v[t] = 2
        bracket[(t, t)] = tuple(v)
    return RootDatum(
        name=f"Q({n})",
        rank=n,
        even_roots=tuple(sorted(roots)),
        coroot=coroots,
        odd_roots=odd,
        simple_even_roots=tuple(simple),
        odd_cartan_dim=n,
        odd_cartan_bracket=bracket,
    )


def periplectic(n: int) -> RootDatum:
    if n < 2:
        raise InvalidGroupSpec(f"P(n) needs n >= 2, got {n}")
    roots, coroots, simple = _type_a_block(n, range(n))
    odd = {}
    for i in range(n):
        for j in range(i + 1, n):
            odd[_sum(n, i, j)] = 1
            odd[_sum(n, i, j, -1)] = 1
    for p in range(n):
        odd[HalfWeight.unit(n, p, 2)] = 1
    return RootDatum(
        name=f"P({n})",
        rank=n,
        even_roots=tuple(sorted(roots)),
        coroot=coroots,
        odd_roots=odd,
        simple_even_roots=tuple(simple),
    )


_SPEC_RE = re.compile(r"^\s*(gl|q|p)\s*:\s*(\d+)\s*(?:,\s*(\d+)\s*)?$", re.IGNORECASE)


def build_group(spec) -> RootDatum:
    """Build a datum from ``"gl:m,n"``, ``"q:n"``, ``"p:n"`` or a tuple like ``("gl", 2, 1)``."""
    if isinstance(spec, str):
        mt = _SPEC_RE.match(spec)
        if not mt:
            raise InvalidGroupSpec(f"cannot parse group spec {spec!r}")
        kind = mt.group(1).lower()
        args = [int(mt.group(2))] + ([int(mt.group(3))] if mt.group(3) else [])
    else:
        kind, *args = spec
        kind = str(kind).lower()
    if kind == "gl" and len(args) == 2:
        return general_linear(*args)
    if kind == "q" and len(args) == 1:
        return queer(*args)
    if kind == "p" and len(args) == 1:
        return periplectic(*args)
    raise InvalidGroupSpec(f"bad group spec {spec!r}")


# ---------------------------------------------------------------- polarization


@dataclass(frozen=True)
class GammaFunctional:
    """``gamma(mu) = sum_i values[i] * mu_i`` with rational values."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def default(cls, rank: int) -> GammaFunctional:
        """``gamma(lambda_i) = -i``."""
        return cls(tuple(Fraction(-i) for i in range(1, rank + 1)))

    @classmethod
    def parse(cls, text: str) -> GammaFunctional:
        return cls(tuple(Fraction(x.strip()) for x in text.split(",") if x.strip()))

    def __call__(self, w: HalfWeight) -> Fraction:
        if w.rank != len(self.values):
            raise RankMismatch(f"gamma has rank {len(self.values)}, weight {w.rank}")
        return sum((v * d for v, d in zip(self.values, w.doubled)), Fraction(0)) / 2


@dataclass(frozen=True, eq=False)
class PolarizedDatum:
    datum: RootDatum
    gamma: GammaFunctional
    pos_even: tuple[HalfWeight, ...]
    neg_even: tuple[HalfWeight, ...]
    pos_odd: Mapping[HalfWeight, int]
    neg_odd: Mapping[HalfWeight, int]
    rho_even: HalfWeight
    rho_odd: HalfWeight
    rho: HalfWeight

    @property
    def rank(self) -> int:
        return self.datum.rank

    @cached_property
    def positive_roots(self) -> tuple[HalfWeight, ...]:
        """Distinct positive roots, even and odd, in increasing gamma order."""
        roots = set(self.pos_even) | set(self.pos_odd)
        return tuple(sorted(roots, key=lambda r: (self.gamma(r), r)))

    @cached_property
    def _scaled_gamma(self) -> tuple[int, ...]:
        # positive integer multiple of gamma, applied to doubled coordinates
        den = math.lcm(*(Fraction(v).denominator for v in self.gamma.values))
        return tuple(int(v * den) for v in self.gamma.values)

    @cached_property
    def _search_roots(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        g = self._scaled_gamma
        return tuple((r.doubled, _dot(g, r.doubled)) for r in self.positive_roots)


def polarize(datum: RootDatum, gamma: GammaFunctional | Sequence | None = None) -> PolarizedDatum:
    """Split the roots of ``datum`` by the sign of ``gamma``."""
    if gamma is None:
        gamma = GammaFunctional.default(datum.rank)
    elif not isinstance(gamma, GammaFunctional):
        gamma = GammaFunctional(tuple(gamma))
    if len(gamma.values) != datum.rank:
        raise RankMismatch(f"gamma has {len(gamma.values)} values, datum rank {datum.rank}")

    # report the lex-largest offending root so the error is deterministic
    for a in sorted(set(datum.even_roots) | set(datum.odd_roots), reverse=True):
        if gamma(a) == 0:
            raise GammaVanishesOnRoot(a)
    pos_even, neg_even = [], []
    for a in datum.even_roots:
        (pos_even if gamma(a) > 0 else neg_even).append(a)
    pos_odd, neg_odd = {}, {}
    for d in sorted(datum.odd_roots):
        (pos_odd if gamma(d) > 0 else neg_odd)[d] = datum.odd_roots[d]

    zero = HalfWeight.zero(datum.rank)
    two_rho0 = sum(pos_even, zero)
    two_rho1 = zero
    for d, m in pos_odd.items():
        two_rho1 = two_rho1 + m * d
    # doubled(rho) == doubled(2 rho) / 2 == integer coordinates of 2 rho
    rho_even = HalfWeight(tuple(x // 2 for x in two_rho0.doubled))
    rho_odd = HalfWeight(tuple(x // 2 for x in two_rho1.doubled))
    return PolarizedDatum(
        datum=datum,
        gamma=gamma,
        pos_even=tuple(pos_even),
        neg_even=tuple(neg_even),
        pos_odd=pos_odd,
        neg_odd=neg_odd,
        rho_even=rho_even,
        rho_odd=rho_odd,
        rho=rho_even - rho_odd,
    )


# ---------------------------------------------------------------- queries


def is_dominant(pd: PolarizedDatum, lam: HalfWeight) -> bool:
    """``<lam, alpha_check> >= 0`` for every positive even root."""
    cor = pd.datum.coroot
    return all(lam.pair(cor[a]) >= 0 for a in pd.pos_even)


def in_lambda_plus_p(pd: PolarizedDatum, lam: HalfWeight, p: int) -> bool:
    """Membership in the restricted dominant set for characteristic ``p``."""
    if p == 0:
        return is_dominant(pd, lam)
    if p < 0 or p in (1, 2) or not isprime(p):
        raise InvalidCharacteristic(f"characteristic must be 0 or an odd prime, got {p}")
    if not is_dominant(pd, lam):
        return False
    shifted = lam + pd.rho_even
    cor = pd.datum.coroot
    return all(0 <= shifted.pair(cor[b]) <= p for b in pd.pos_even)


def leq(pd: PolarizedDatum, mu: HalfWeight, lam: HalfWeight) -> bool:
    """Whether ``lam - mu`` is a nonnegative integer combination of positive roots.

    Depth-first search over residuals.  ``gamma`` is strictly positive on
    every positive root, so ``gamma(residual)`` strictly drops along each
    branch and bounds the search.
    """
    if mu.rank != lam.rank:
        raise RankMismatch(f"rank {mu.rank} vs {lam.rank}")
    roots = pd._search_roots
    if not roots:
        return mu == lam
    gvec = pd._scaled_gamma
    failed: set = set()

    def search(res: tuple[int, ...], g: int) -> bool:
        if not any(res):
            return True
        if g <= 0 or res in failed:
            return False
        for r, gr in roots:
            if gr > g:
                break
            nxt = tuple(a - b for a, b in zip(res, r))
            if search(nxt, g - gr):
                return True
        failed.add(res)
        return False

    diff = lam - mu
    return search(diff.doubled, _dot(gvec, diff.doubled))


def admits_distinguished_parabolic(pd: PolarizedDatum) -> bool:
    """Root-level test for a parabolic with full even part and odd part ``b^-_1``.

    Requires a purely even Cartan and that the negative odd roots are stable
    under adding even roots (whenever the sum is again an odd root).
    """
    datum = pd.datum
    if datum.odd_cartan_dim != 0:
        return False
    odd = datum.odd_roots
    for d in pd.neg_odd:
        for a in datum.even_roots:
            s = d + a
            if s in odd and s not in pd.neg_odd:
                return False
    return True
