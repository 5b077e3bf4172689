"""Weyl numerators, even characters and super characters of induced modules.

The character of the induced supermodule ``H^0(lam)`` for a dominant weight is

    A(lam + rho_0) / A(rho_0) * prod_{delta in positive odd roots} (1 + e^{-delta})

where ``A(mu) = sum_w sign(w) e^{w mu}``.  Everything here is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence

from .clifford import classify, gram_from_weight
from .errors import (
    LambdaNotInSupport,
    NoParabolic,
    NotDominant,
    NotIntegral,
    NotPartition,
    RhoOddNotInvariant,
)
from .fields import AlgebraicallyClosed
from .laurent import CharacterPoly, HalfWeight, coefficient, dim_eval, exact_divide, mono
from .rootdata import (
    PolarizedDatum,
    admits_distinguished_parabolic,
    is_dominant,
    leq,
    weyl_elements,
)


def weyl_numerator(pd: PolarizedDatum, mu: HalfWeight) -> CharacterPoly:
    """Alternating orbit sum ``sum_w (-1)^l(w) e^{w mu}``."""
    terms: dict = {}
    for w in weyl_elements(pd):
        k = w.act(mu).doubled
        c = terms.get(k, 0) + w.sign
        if c:
            terms[k] = c
        else:
            terms.pop(k, None)
    return CharacterPoly(terms, mu.rank)


@lru_cache(maxsize=128)
def weyl_denominator(pd: PolarizedDatum) -> CharacterPoly:
    return weyl_numerator(pd, pd.rho_even)


def _require_dominant(pd: PolarizedDatum, lam: HalfWeight):
    if not lam.is_integral():
        raise NotIntegral(f"{lam} is not an integral weight")
    if not is_dominant(pd, lam):
        raise NotDominant(f"{lam} is not dominant for {pd.datum.name}")


def even_character(pd: PolarizedDatum, lam: HalfWeight) -> CharacterPoly:
    """Character of the induced module of the even part: ``A(lam + rho_0) / A(rho_0)``."""
    _require_dominant(pd, lam)
    return exact_divide(weyl_numerator(pd, lam + pd.rho_even), weyl_denominator(pd))


def odd_factor(pd: PolarizedDatum) -> CharacterPoly:
    """``prod (1 + e^{-delta})^{m_delta}`` over positive odd roots."""
    result = CharacterPoly.one(pd.rank)
    for d, m in pd.pos_odd.items():
        factor = CharacterPoly.one(pd.rank) + mono(-d)
        for _ in range(m):
            result = result * factor
    return result


def weyl_dimension(pd: PolarizedDatum, lam: HalfWeight) -> Fraction:
    """``prod <lam + rho_0, a^v> / <rho_0, a^v>`` over positive even roots."""
    cor = pd.datum.coroot
    shifted = lam + pd.rho_even
    out = Fraction(1)
    for a in pd.pos_even:
        out *= shifted.pair(cor[a]) / pd.rho_even.pair(cor[a])
    return out


@dataclass(frozen=True)
class SuperCharacterReport:
    lam: HalfWeight
    even_char: CharacterPoly
    odd_factor: CharacterPoly
    super_char: CharacterPoly
    even_dim: int
    super_dim: int
    top_weight_ok: bool
    n_lambda: int = 1
    euler_only: bool = False

    def to_record(self) -> dict:
        rec = {
            "lambda": list(self.lam.integer_coords()),
            "even_char": self.even_char.to_records(),
            "odd_factor": self.odd_factor.to_records(),
            "super_char": self.super_char.to_records(),
            "even_dim": self.even_dim,
            "super_dim": self.super_dim,
            "top_weight_ok": self.top_weight_ok,
        }
        if self.euler_only:
            rec["note"] = "Euler characteristic only"
        return rec


def _closed_u_dim(pd: PolarizedDatum, lam: HalfWeight) -> int:
    if pd.datum.odd_cartan_dim == 0:
        return 1
    qs = gram_from_weight(pd.datum, lam, AlgebraicallyClosed(0))
    return classify(qs).closed_simple_dim


def super_character(pd: PolarizedDatum, lam: HalfWeight, force: bool = False) -> SuperCharacterReport:
    """Character of ``H^0(lam)``.

    Needs a distinguished parabolic for ``pd``.  With ``force=True`` the same
    expression is returned without that guarantee and the report is flagged
    as an Euler characteristic only.
    """
    parabolic = admits_distinguished_parabolic(pd)
    if not parabolic and not force:
        raise NoParabolic(f"{pd.datum.name} has no distinguished parabolic for gamma={_fmt_gamma(pd)}")
    ev = even_character(pd, lam)
    odd = odd_factor(pd)
    sup = ev * odd
    return SuperCharacterReport(
        lam=lam,
        even_char=ev,
        odd_factor=odd,
        super_char=sup,
        even_dim=dim_eval(ev),
        super_dim=dim_eval(sup),
        top_weight_ok=maximal_weight_check(pd, lam, sup),
        n_lambda=_closed_u_dim(pd, lam),
        euler_only=not parabolic,
    )


def _fmt_gamma(pd):
    return "(" + ",".join(str(v) for v in pd.gamma.values) + ")"


def rho_odd_invariant(pd: PolarizedDatum) -> bool:
    return all(w.act(pd.rho_odd) == pd.rho_odd for w in weyl_elements(pd))


def super_character_rho_form(pd: PolarizedDatum, lam: HalfWeight, force: bool = False) -> CharacterPoly:
    """``A(lam + rho) * prod (e^{delta/2} + e^{-delta/2}) / A(rho_0)``.

    Valid when ``rho_1`` is fixed by the Weyl group; agrees with
    :func:`super_character`.
    """
    if not admits_distinguished_parabolic(pd) and not force:
        raise NoParabolic(f"{pd.datum.name} has no distinguished parabolic")
    _require_dominant(pd, lam)
    if not rho_odd_invariant(pd):
        raise RhoOddNotInvariant(f"rho_1 = {pd.rho_odd} is not Weyl invariant")
    num = weyl_numerator(pd, lam + pd.rho)
    for d, m in pd.pos_odd.items():
        # e^{delta/2}: doubled exponent of delta/2 equals the integer coordinates of delta
        half = HalfWeight(d.integer_coords())
        factor = mono(half) + mono(-half)
        for _ in range(m):
            num = num * factor
    return exact_divide(num, weyl_denominator(pd))


# ---------------------------------------------------------------- Schur oracle


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def schur(partition: Sequence[int], nvars: int, offset: int = 0, rank: Optional[int] = None) -> CharacterPoly:
    """Bialternant Schur polynomial in ``t_{offset+1} .. t_{offset+nvars}``.

    ``det(t_i^{d_j + k - j}) / prod_{i<j} (t_i - t_j)``, computed by exact
    division.  Entries may be negative (Laurent-Schur).  The result lives in
    rank ``rank`` (default ``offset + nvars``).
    """
    parts = list(partition)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise NotPartition(f"{tuple(partition)} is not weakly decreasing")
    if nvars < 1:
        raise NotPartition("need at least one variable")
    rank = offset + nvars if rank is None else rank
    if len(parts) > nvars:
        if any(parts[nvars:]):
            if parts[-1] >= 0:
                return CharacterPoly.zero(rank)
            raise NotPartition(f"{tuple(partition)} has more than {nvars} nonzero parts")
        parts = parts[:nvars]
    if parts and parts[-1] < 0 and len(parts) < nvars:
        raise NotPartition(f"{tuple(partition)} padded with zeros is not weakly decreasing")
    parts += [0] * (nvars - len(parts))
    k = nvars

    def var_power(i, e):
        d = [0] * rank
        d[offset + i] = 2 * e
        return tuple(d)

    det: dict = {}
    exps = [parts[j] + k - 1 - j for j in range(k)]
    for perm in permutations(range(k)):
        key = [0] * rank
        for j, i in enumerate(perm):
            key[offset + i] += 2 * exps[j]
        key = tuple(key)
        det[key] = det.get(key, 0) + _perm_sign(perm)
    numerator = CharacterPoly(det, rank)
    vandermonde = CharacterPoly.one(rank)
    for i in range(k):
        for j in range(i + 1, k):
            vandermonde = vandermonde * CharacterPoly({var_power(i, 1): 1, var_power(j, 1): -1}, rank)
    return exact_divide(numerator, vandermonde)


def gl_super_character(m: int, n: int, lam: HalfWeight | Sequence[int]) -> CharacterPoly:
    """``s_{lam+}(t_1..t_m) s_{lam-}(t_{m+1}..t_{m+n}) prod (1 + t_j / t_i)``."""
    if not isinstance(lam, HalfWeight):
        lam = HalfWeight.of(lam)
    coords = lam.integer_coords()
    if len(coords) != m + n:
        raise NotDominant(f"weight {lam} does not have {m + n} coordinates")
    plus, minus = coords[:m], coords[m:]
    if any(plus[i] < plus[i + 1] for i in range(m - 1)) or any(
        minus[i] < minus[i + 1] for i in range(n - 1)
    ):
        raise NotDominant(f"{lam} is not dominant for GL({m}|{n})")
    rank = m + n
    result = schur(plus, m, 0, rank) * schur(minus, n, m, rank)
    one = CharacterPoly.one(rank)
    for i in range(m):
        for j in range(m, m + n):
            d = [0] * rank
            d[j] += 2
            d[i] -= 2
            result = result * (one + mono(HalfWeight(tuple(d))))
    return result


# ---------------------------------------------------------------- checks


def maximal_weight_check(pd: PolarizedDatum, lam: HalfWeight, ch: CharacterPoly) -> bool:
    """``lam`` occurs in ``ch`` and no other weight of ``ch`` lies above it."""
    c = coefficient(ch, lam)
    if c == 0:
        raise LambdaNotInSupport(f"{lam} does not occur in the character")
    if c < 1:
        return False
    for mu in ch.support():
        if mu != lam and leq(pd, lam, mu):
            return False
    return True


def induced_dim_bound(pd: PolarizedDatum, lam: HalfWeight, closed_u_dim: Optional[int] = None) -> bool:
    """``dim H^0(lam) <= dim H^0_ev(lam) * n_lam * 2^(odd roots + l_1)``."""
    _require_dominant(pd, lam)
    if closed_u_dim is None:
        closed_u_dim = _closed_u_dim(pd, lam)
    report = super_character(pd, lam, force=True)
    exponent = pd.datum.total_odd_multiplicity + pd.datum.odd_cartan_dim
    return report.super_dim <= report.even_dim * closed_u_dim * 2**exponent


@dataclass(frozen=True)
class OddFactorVariant:
    label: str
    odd_factor: CharacterPoly
    super_char: CharacterPoly
    super_dim: int
    maximal_weight_ok: bool

    def to_record(self) -> dict:
        return {
            "label": self.label,
            "odd_factor": self.odd_factor.to_records(),
            "super_char": self.super_char.to_records(),
            "super_dim": self.super_dim,
            "maximal_weight_ok": self.maximal_weight_ok,
        }


def periplectic_variants(pd: PolarizedDatum, lam: HalfWeight) -> list[OddFactorVariant]:
    """Both candidate odd factors for P(n).

    ``literal`` is ``prod (1 + e^{-delta})`` over the positive odd roots of
    ``pd``; ``printed`` is ``prod_{i<j} (1 + 1/(t_i t_j))``.  Each is checked
    against the maximal-weight property; neither is preferred silently.
    """
    ev = even_character(pd, lam)
    n = pd.rank
    one = CharacterPoly.one(n)
    printed = one
    for i in range(n):
        for j in range(i + 1, n):
            d = [0] * n
            d[i] -= 2
            d[j] -= 2
            printed = printed * (one + mono(HalfWeight(tuple(d))))
    out = []
    for label, factor in (("literal", odd_factor(pd)), ("printed", printed)):
        sc = ev * factor
        out.append(
            OddFactorVariant(label, factor, sc, dim_eval(sc), maximal_weight_check(pd, lam, sc))
        )
    return out
