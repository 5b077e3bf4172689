"""Exact arithmetic in the group ring Z[1/2 Lambda].

Weights live in the lattice of half-integer vectors.  They are stored as
*doubled* integer vectors so that all exponent arithmetic stays in plain
Python integers.  A :class:`CharacterPoly` is a finitely supported map from
doubled exponent vectors to nonzero integers.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add, sub as _sub
from typing import Iterable, Mapping, Sequence

from .errors import DivisionByZero, NotDivisible, NotIntegral, RankMismatch


@dataclass(frozen=True, order=True)
class HalfWeight:
    """An element of 1/2 Z^rank, stored as ``doubled = 2 * coordinates``."""

    doubled: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.doubled, tuple):
            object.__setattr__(self, "doubled", tuple(self.doubled))
        if len(self.doubled) < 1:
            raise ValueError("HalfWeight needs rank >= 1")
        if not all(isinstance(x, int) for x in self.doubled):
            raise TypeError("doubled entries must be integers")

    @classmethod
    def of(cls, coords: Iterable) -> HalfWeight:
        """Build from coordinates (ints, Fractions or strings like ``"1/2"``)."""
        doubled = []
        for c in coords:
            f = Fraction(c) * 2
            if f.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            doubled.append(int(f))
        return cls(tuple(doubled))

    @classmethod
    def zero(cls, rank: int) -> HalfWeight:
        return cls((0,) * rank)

    @classmethod
    def unit(cls, rank: int, i: int, scale: int = 1) -> HalfWeight:
        """``scale * lambda_i`` (0-based ``i``)."""
        d = [0] * rank
        d[i] = 2 * scale
        return cls(tuple(d))

    @property
    def rank(self) -> int:
        return len(self.doubled)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def is_integral(self) -> bool:
        return all(x % 2 == 0 for x in self.doubled)

    def integer_coords(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise NotIntegral(f"{self} is not integral")
        return tuple(x // 2 for x in self.doubled)

    def pair(self, vector: Sequence) -> Fraction:
        """Dot product with a coweight, e.g. ``<mu, alpha_check>``."""
        if len(vector) != self.rank:
            raise RankMismatch(f"rank {self.rank} vs {len(vector)}")
        return Fraction(sum(x * y for x, y in zip(self.doubled, vector)), 2)

    def __add__(self, other: HalfWeight) -> HalfWeight:
        _check_rank(self.rank, other.rank)
        return HalfWeight(tuple(map(_add, self.doubled, other.doubled)))

    def __sub__(self, other: HalfWeight) -> HalfWeight:
        _check_rank(self.rank, other.rank)
        return HalfWeight(tuple(map(_sub, self.doubled, other.doubled)))

    def __neg__(self) -> HalfWeight:
        return HalfWeight(tuple(-x for x in self.doubled))

    def __mul__(self, k: int) -> HalfWeight:
        return HalfWeight(tuple(k * x for x in self.doubled))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.doubled)

    def __str__(self):
        return "(" + ",".join(_frac_str(Fraction(x, 2)) for x in self.doubled) + ")"


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _check_rank(a: int, b: int):
    if a != b:
        raise RankMismatch(f"rank {a} vs {b}")


class CharacterPoly:
    """Element of Z[1/2 Lambda] with integer coefficients.

    Instances are immutable.  ``terms`` maps doubled exponent tuples to
    nonzero integers; use :meth:`items` to iterate with :class:`HalfWeight`
    keys.
    """

    __slots__ = ("_terms", "_rank", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int], rank: int):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        clean = {}
        for k, v in terms.items():
            k = tuple(k)
            if len(k) != rank:
                raise RankMismatch(f"exponent {k} has rank {len(k)}, expected {rank}")
            if v:
                clean[k] = int(v)
        self._terms = clean
        self._rank = rank
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, rank: int) -> CharacterPoly:
        # trusted constructor: keys already tuples of correct rank, no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._rank = rank
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rank: int) -> CharacterPoly:
        return cls._raw({}, rank)

    @classmethod
    def one(cls, rank: int) -> CharacterPoly:
        return cls._raw({(0,) * rank: 1}, rank)

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        for k in sorted(self._terms):
            yield HalfWeight(k), self._terms[k]

    def support(self) -> list[HalfWeight]:
        return [HalfWeight(k) for k in sorted(self._terms)]

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        return self._rank == other._rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._rank, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        return add(self, _coerce(other, self._rank))

    __radd__ = __add__

    def __neg__(self):
        return CharacterPoly._raw({k: -v for k, v in self._terms.items()}, self._rank)

    def __sub__(self, other):
        return add(self, -_coerce(other, self._rank))

    def __rsub__(self, other):
        return add(_coerce(other, self._rank), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other, self._rank))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = CharacterPoly.one(self._rank)
        for _ in range(n):
            result = mul(result, self)
        return result

    def map_exponents(self, fn) -> CharacterPoly:
        """Apply ``fn`` (doubled tuple -> doubled tuple) to every exponent, merging terms."""
        out: dict = {}
        for k, v in self._terms.items():
            nk = tuple(fn(k))
            c = out.get(nk, 0) + v
            if c:
                out[nk] = c
            else:
                out.pop(nk, None)
        return CharacterPoly._raw(out, self._rank)

    def to_text(self) -> str:
        return render(self)

    __str__ = to_text

    def __repr__(self):
        return f"CharacterPoly({self.to_text()!r}, rank={self._rank})"

    def to_records(self) -> list[dict]:
        return [{"doubled": list(k), "coeff": self._terms[k]} for k in sorted(self._terms)]

    @classmethod
    def from_records(cls, records: Iterable[Mapping], rank: int) -> CharacterPoly:
        terms: dict = {}
        for rec in records:
            k = tuple(int(x) for x in rec["doubled"])
            terms[k] = terms.get(k, 0) + int(rec["coeff"])
        return cls(terms, rank)


def _coerce(x, rank: int) -> CharacterPoly:
    if isinstance(x, CharacterPoly):
        return x
    if isinstance(x, HalfWeight):
        return mono(x)
    if isinstance(x, int):
        return CharacterPoly({(0,) * rank: x}, rank)
    raise TypeError(f"cannot coerce {type(x).__name__} to CharacterPoly")


def mono(w: HalfWeight) -> CharacterPoly:
    """The monomial ``e^w``."""
    return CharacterPoly._raw({w.doubled: 1}, w.rank)


def add(p: CharacterPoly, q: CharacterPoly) -> CharacterPoly:
    _check_rank(p.rank, q.rank)
    out = dict(p._terms)
    for k, v in q._terms.items():
        c = out.get(k, 0) + v
        if c:
            out[k] = c
        else:
            del out[k]
    return CharacterPoly._raw(out, p.rank)


def mul(p: CharacterPoly, q: CharacterPoly) -> CharacterPoly:
    _check_rank(p.rank, q.rank)
    if len(p) < len(q):
        p, q = q, p
    out: dict = {}
    qitems = list(q._terms.items())
    for k1, c1 in p._terms.items():
        for k2, c2 in qitems:
            k = tuple(map(_add, k1, k2))
            out[k] = out.get(k, 0) + c1 * c2
    return CharacterPoly._raw({k: v for k, v in out.items() if v}, p.rank)


def _quotient_box(p: CharacterPoly, q: CharacterPoly):
    # Degree in each variable is additive under products of nonzero Laurent
    # polynomials, so any exact quotient lives inside this box.
    lo, hi = [], []
    pk, qk = list(p._terms), list(q._terms)
    for i in range(p.rank):
        pmin = min(k[i] for k in pk)
        pmax = max(k[i] for k in pk)
        qmin = min(k[i] for k in qk)
        qmax = max(k[i] for k in qk)
        lo.append(pmin - qmin)
        hi.append(pmax - qmax)
    return lo, hi


def exact_divide(p: CharacterPoly, q: CharacterPoly) -> CharacterPoly:
    """Return ``r`` with ``q * r == p``.

    Lexicographic leading-term elimination.  Raises :class:`NotDivisible`
    when no finitely supported integral quotient exists and
    :class:`DivisionByZero` when ``q`` is zero.
    """
    _check_rank(p.rank, q.rank)
    if q.is_zero():
        raise DivisionByZero("division by the zero character")
    if p.is_zero():
        return CharacterPoly.zero(p.rank)
    lo, hi = _quotient_box(p, q)
    if any(a > b for a, b in zip(lo, hi)):
        raise NotDivisible("exponent ranges are incompatible")
    q_lead = max(q._terms)
    q_lead_c = q._terms[q_lead]
    q_items = list(q._terms.items())

    rem = dict(p._terms)
    heap = [tuple(-x for x in k) for k in rem]
    heapq.heapify(heap)
    quotient: dict = {}
    while rem:
        key = tuple(-x for x in heapq.heappop(heap))
        if key not in rem:
            continue
        c = rem[key]
        if c % q_lead_c:
            raise NotDivisible(f"leading coefficient {c} not divisible by {q_lead_c}")
        e = tuple(map(_sub, key, q_lead))
        if any(x < a or x > b for x, a, b in zip(e, lo, hi)):
            raise NotDivisible("quotient term leaves the admissible exponent box")
        coef = c // q_lead_c
        quotient[e] = coef
        for k2, c2 in q_items:
            t = tuple(map(_add, e, k2))
            old = rem.get(t)
            new = (old or 0) - coef * c2
            if new:
                rem[t] = new
                if old is None:
                    heapq.heappush(heap, tuple(-x for x in t))
            elif old is not None:
                del rem[t]
    return CharacterPoly._raw(quotient, p.rank)


def dim_eval(p: CharacterPoly) -> int:
    """Evaluate every ``e^w`` at 1."""
    return sum(p._terms.values())


def coefficient(p: CharacterPoly, w: HalfWeight) -> int:
    _check_rank(p.rank, w.rank)
    return p._terms.get(w.doubled, 0)


def _monomial_text(key: tuple[int, ...]) -> str:
    parts = []
    for i, d in enumerate(key, start=1):
        if d == 0:
            continue
        if d == 2:
            parts.append(f"t{i}")
        elif d % 2 == 0:
            parts.append(f"t{i}^{d // 2}")
        else:
            parts.append(f"t{i}^({d}/2)")
    return "*".join(parts)


def render(p: CharacterPoly) -> str:
    """Canonical text: terms in ascending lexicographic order of exponents."""
    if p.is_zero():
        return "0"
    out = []
    for k in sorted(p._terms):
        c = p._terms[k]
        m = _monomial_text(k)
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{mag}*{m}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)
