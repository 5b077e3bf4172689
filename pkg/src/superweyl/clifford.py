"""Quadratic spaces and simple supermodules of Clifford superalgebras.

The Clifford superalgebra of ``(V, b)`` is ``T(V)`` modulo ``xy + yx - b(x, y)``
with ``V`` odd.  Its simple supermodule is unique up to parity change; this
module decides whether it is isomorphic to its parity shift (type Q) or not
(type M), computes its dimension over an algebraically closed field, and
builds explicit matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .errors import InstanceTooLarge, SquareRootUnavailable
from .fields import AlgebraicallyClosed, FieldMode, PrimeField, Rationals
from .laurent import HalfWeight
from .rootdata import RootDatum

ZERO, SQUARE, NONSQUARE = "Zero", "Square", "NonSquare"


@dataclass(frozen=True)
class QuadraticSpace:
    gram: tuple[tuple, ...]
    mode: FieldMode

    def __post_init__(self):
        g = tuple(tuple(self.mode.element(x) for x in row) for row in self.gram)
        r = len(g)
        if any(len(row) != r for row in g):
            raise ValueError("gram matrix must be square")
        for i in range(r):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def dim(self) -> int:
        return len(self.gram)

    @classmethod
    def diagonal(cls, entries: Sequence, mode: FieldMode) -> QuadraticSpace:
        r = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(r)) for i in range(r)), mode)


def gram_from_weight(datum: RootDatum, lam: HalfWeight, mode: FieldMode | None = None) -> QuadraticSpace:
    """The form ``(x, y) -> lam([x, y])`` on the odd Cartan part."""
    mode = mode or Rationals()
    lam_coords = lam.integer_coords()
    n = datum.odd_cartan_dim
    gram = tuple(
        tuple(sum(c * x for c, x in zip(datum.bracket(t, s), lam_coords)) for s in range(n))
        for t in range(n)
    )
    return QuadraticSpace(gram, mode)


@dataclass(frozen=True)
class Diagonalization:
    basis: tuple[tuple, ...]  # columns are the new basis vectors
    diagonal: tuple

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def diagonalize(qs: QuadraticSpace) -> Diagonalization:
    """Orthogonal basis by symmetric Gaussian elimination.

    Returns ``P`` and ``D`` with ``P^T G P = diag(D)``; the zero entries of
    ``D`` come last.  When every remaining diagonal entry vanishes but some
    off-diagonal one does not, ``x_j`` is replaced by ``x_j + x_k``.
    Elimination is fraction-free: ``x_k <- a_ii x_k - a_ki x_i``.
    """
    F = qs.mode
    r = qs.dim
    A = [list(row) for row in qs.gram]
    P = [[F.element(int(i == j)) for j in range(r)] for i in range(r)]

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in P:
            row[i], row[j] = row[j], row[i]

    def add_multiple(dst, src, a, c):
        # x_dst <- a * x_dst + c * x_src, applied as a congruence
        for row in A:
            row[dst] = F.add(F.mul(a, row[dst]), F.mul(c, row[src]))
        A[dst] = [F.add(F.mul(a, x), F.mul(c, y)) for x, y in zip(A[dst], A[src])]
        for row in P:
            row[dst] = F.add(F.mul(a, row[dst]), F.mul(c, row[src]))

    one = F.element(1)
    for i in range(r):
        piv = next((j for j in range(i, r) if not F.is_zero(A[j][j])), None)
        if piv is None:
            pair = next(
                ((j, k) for j in range(i, r) for k in range(j + 1, r) if not F.is_zero(A[j][k])),
                None,
            )
            if pair is None:
                break
            j, k = pair
            add_multiple(j, k, one, one)
            piv = j
        swap(i, piv)
        a_ii = A[i][i]
        for k in range(i + 1, r):
            if not F.is_zero(A[k][i]):
                add_multiple(k, i, a_ii, F.neg(A[k][i]))
    diag = tuple(A[i][i] for i in range(r))
    return Diagonalization(tuple(tuple(row) for row in P), diag)


@dataclass(frozen=True)
class CliffordClassification:
    r: int
    rad_dim: int
    d: int
    delta: object  # signed determinant of the nondegenerate part, or None if d == 0
    delta_square_class: str
    simple_type: str
    closed_simple_dim: Optional[int]
    isotropic_dim: int
    mode: FieldMode

    def to_record(self) -> dict:
        return {
            "r": self.r,
            "rad_dim": self.rad_dim,
            "d": self.d,
            "delta_class": self.delta_square_class,
            "type": self.simple_type,
            "closed_dim": self.closed_simple_dim,
            "isotropic_dim": self.isotropic_dim,
        }


def signed_determinant(entries: Sequence, mode: FieldMode):
    """``(-1)^(d(d-1)/2) * prod(entries)`` for the nonzero diagonal entries."""
    d = len(entries)
    prod = mode.element(1)
    for x in entries:
        prod = mode.mul(prod, x)
    return mode.neg(prod) if (d * (d - 1) // 2) % 2 else prod


def square_class(delta, d: int, mode: FieldMode) -> str:
    if d == 0:
        return ZERO
    return SQUARE if mode.is_square(delta) else NONSQUARE


def classify(qs: QuadraticSpace) -> CliffordClassification:
    F = qs.mode
    diag = diagonalize(qs)
    nonzero = [x for x in diag.diagonal if not F.is_zero(x)]
    r = qs.dim
    d = len(nonzero)
    rad_dim = r - d
    delta = signed_determinant(nonzero, F) if d else None
    cls_ = square_class(delta, d, F)
    simple_type = "M" if cls_ == ZERO or (d % 2 == 0 and cls_ == SQUARE) else "Q"
    closed_dim = 2 ** ((d + 1) // 2) if isinstance(F, AlgebraicallyClosed) else None
    return CliffordClassification(
        r=r,
        rad_dim=rad_dim,
        d=d,
        delta=delta,
        delta_square_class=cls_,
        simple_type=simple_type,
        closed_simple_dim=closed_dim,
        isotropic_dim=rad_dim + d // 2,
        mode=F,
    )


# ---------------------------------------------------------------- representations

_X = ((0, 1), (1, 0))  # odd, squares to +1
_W = ((0, -1), (1, 0))  # odd, squares to -1
_Z = ((1, 0), (0, -1))  # parity
_I = ((1, 0), (0, 1))


def _kron(a, b):
    return tuple(
        tuple(x * y for x in ra for y in rb) for ra in a for rb in b
    )


def _kron_all(mats):
    out = ((1,),)
    for m in mats:
        out = _kron(out, m)
    return out


def _base_generators(d: int):
    """``d`` pairwise anticommuting odd sign matrices and their squares (+1 / -1)."""
    slots = (d + 1) // 2
    gens, squares = [], []
    for j in range(slots):
        for base, sq in ((_X, 1), (_W, -1)):
            if len(gens) == d:
                break
            factors = [_Z] * j + [base] + [_I] * (slots - j - 1)
            gens.append(_kron_all(factors))
            squares.append(sq)
    return gens, squares, 2**slots


@dataclass(frozen=True)
class MatrixRep:
    """Graded matrix representation of a Clifford superalgebra.

    ``generators[i]`` represents the i-th orthogonal basis vector
    ``basis[:, i]``.  The actual image is ``sqrt(radicands[i]) * generators[i]``;
    radicands are 1 except in closed mode, where missing square roots are
    adjoined formally.  Basis vectors of the representation space are ordered
    even part first.
    """

    generators: tuple
    radicands: tuple
    even_dim: int
    odd_dim: int
    basis: tuple
    diagonal: tuple
    mode: FieldMode

    @property
    def size(self) -> int:
        return self.even_dim + self.odd_dim

    def _mm(self, a, b):
        F = self.mode
        cols = list(zip(*b))
        out = []
        for row in a:
            vals = []
            for col in cols:
                acc = F.element(0)
                for x, y in zip(row, col):
                    if x and y:
                        acc = F.add(acc, F.mul(x, y))
                vals.append(acc)
            out.append(tuple(vals))
        return tuple(out)

    def is_odd(self, m) -> bool:
        e = self.even_dim
        n = self.size
        return all(
            m[i][j] == 0 for i in range(n) for j in range(n) if (i < e) == (j < e)
        )

    def relations_hold(self) -> bool:
        """Check ``x_i x_j + x_j x_i = b(x_i, x_j) * I`` exactly on the orthogonal basis."""
        F = self.mode
        n = self.size
        two = F.element(2)
        for i, gi in enumerate(self.generators):
            if not self.is_odd(gi):
                return False
            for j, gj in enumerate(self.generators):
                if j < i:
                    continue
                ab = self._mm(gi, gj)
                ba = self._mm(gj, gi)
                anti = [[F.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)]
                if i != j:
                    # b(x_i, x_j) = 0 for an orthogonal basis; scale factors are irrelevant
                    if any(not F.is_zero(x) for row in anti for x in row):
                        return False
                else:
                    target = self.diagonal[i]
                    s = self.radicands[i]
                    for a in range(n):
                        for c in range(n):
                            want = target if a == c else F.element(0)
                            if F.mul(s, anti[a][c]) != F.element(want):
                                return False
        return True

    def standard_images(self):
        """Images of the original basis vectors, or ``None`` if any root is formal.

        Uses ``e_k = sum_i (P^-1)_{ik} x_i``.
        """
        F = self.mode
        if any(s != F.element(1) for s in self.radicands):
            return None
        inv = _invert(self.basis, F)
        r = len(self.basis)
        n = self.size
        out = []
        for k in range(r):
            m = [[F.element(0)] * n for _ in range(n)]
            for i in range(r):
                c = inv[i][k]
                if F.is_zero(c):
                    continue
                g = self.generators[i]
                for a in range(n):
                    for b in range(n):
                        if g[a][b]:
                            m[a][b] = F.add(m[a][b], F.mul(c, g[a][b]))
            out.append(tuple(tuple(row) for row in m))
        return out


def _invert(P, F: FieldMode):
    n = len(P)
    aug = [list(P[i]) + [F.element(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if not F.is_zero(aug[i][c]))
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = F.inv(aug[c][c])
        aug[c] = [F.mul(inv, x) for x in aug[c]]
        for i in range(n):
            if i != c and not F.is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _assign_signs(halves, F: FieldMode, closed: bool):
    """Choose which generators square to -1 in the base construction.

    ``halves[i] = delta_i / 2`` must equal ``eps_i * c_i^2``.  Returns a list of
    ``(eps_i, c_i, radicand_i)``.
    """
    d = len(halves)
    n_minus = d // 2
    plus_ok = [F.sqrt(h) is not None for h in halves]
    minus_ok = [F.sqrt(F.neg(h)) is not None for h in halves]
    only_minus = [i for i in range(d) if minus_ok[i] and not plus_ok[i]]
    both = [i for i in range(d) if minus_ok[i] and plus_ok[i]]
    minus_set = set(only_minus)
    for i in both:
        if len(minus_set) >= n_minus:
            break
        minus_set.add(i)
    feasible = (
        all(plus_ok[i] or minus_ok[i] for i in range(d))
        and len(only_minus) <= n_minus
        and len(minus_set) == n_minus
    )
    if not feasible:
        if not closed:
            bad = next(
                (halves[i] for i in range(d) if not (plus_ok[i] or minus_ok[i])),
                halves[0] if halves else None,
            )
            raise SquareRootUnavailable(bad)
        # keep whatever roots exist, adjoin the rest formally
        minus_set = set(only_minus[:n_minus])
        for i in range(d):
            if len(minus_set) >= n_minus:
                break
            if i not in minus_set and not plus_ok[i]:
                minus_set.add(i)
        for i in range(d):
            if len(minus_set) >= n_minus:
                break
            minus_set.add(i)
    out = []
    for i, h in enumerate(halves):
        eps = -1 if i in minus_set else 1
        target = h if eps == 1 else F.neg(h)
        root = F.sqrt(target)
        if root is None:
            out.append((eps, F.element(1), target))
        else:
            out.append((eps, root, F.element(1)))
    return out


def construct_rep(qs: QuadraticSpace) -> MatrixRep:
    """Explicit simple supermodule of size ``2^floor((d+1)/2)``.

    Nondegenerate orthogonal basis vectors go to scaled tensor products of
    2x2 sign matrices; radical vectors act by zero.  Over Q and F_p the
    needed square roots must exist in the field, otherwise
    :class:`SquareRootUnavailable` is raised.
    """
    F = qs.mode
    diag = diagonalize(qs)
    d = diag.rank
    closed = isinstance(F, AlgebraicallyClosed)
    inv2 = F.inv(2)
    halves = [F.mul(x, inv2) for x in diag.diagonal[:d]]
    choice = _assign_signs(halves, F, closed)

    base, squares, size = _base_generators(d)
    # the i-th slot with square eps: route generator i to a base matrix of that sign
    plus_pool = [g for g, s in zip(base, squares) if s == 1]
    minus_pool = [g for g, s in zip(base, squares) if s == -1]
    order = list(range(size))
    even_idx = [k for k in order if bin(k).count("1") % 2 == 0]
    odd_idx = [k for k in order if bin(k).count("1") % 2 == 1]
    perm = even_idx + odd_idx

    def permute(m):
        return tuple(tuple(F.element(m[a][b]) for b in perm) for a in perm)

    gens, rads = [], []
    for eps, root, rad in choice:
        b = (plus_pool if eps == 1 else minus_pool).pop(0)
        gens.append(tuple(tuple(F.mul(root, x) for x in row) for row in permute(b)))
        rads.append(rad)
    zero = tuple(tuple(F.element(0) for _ in range(size)) for _ in range(size))
    for _ in range(qs.dim - d):
        gens.append(zero)
        rads.append(F.element(1))
    even_dim = len(even_idx)
    return MatrixRep(
        generators=tuple(gens),
        radicands=tuple(rads),
        even_dim=even_dim,
        odd_dim=size - even_dim,
        basis=diag.basis,
        diagonal=diag.diagonal,
        mode=F,
    )


# ---------------------------------------------------------------- brute-force oracle

BRUTE_MAX_R = 3
BRUTE_MAX_P = 7


def _clifford_left_mult(gram, half_diag, p, r):
    """Matrices of left multiplication by each generator on the monomial basis.

    Monomials are increasing index tuples.  Normal ordering uses
    ``e_k e_f = -e_f e_k + b(k, f)`` for ``k > f`` and ``e_k^2 = b(k, k) / 2``.
    """
    words = [w for n in range(r + 1) for w in _subsets(r, n)]
    index = {w: i for i, w in enumerate(words)}

    def gen_times(k, w):
        if not w:
            return {(k,): 1}
        f = w[0]
        if k < f:
            return {(k,) + w: 1}
        if k == f:
            return {w[1:]: half_diag[k]} if half_diag[k] else {}
        out: dict = {}
        for u, c in gen_times(k, w[1:]).items():
            key = (f,) + u
            out[key] = (out.get(key, 0) - c) % p
        if gram[k][f]:
            out[w[1:]] = (out.get(w[1:], 0) + gram[k][f]) % p
        return {u: c for u, c in out.items() if c}

    mats = []
    n = len(words)
    for k in range(r):
        m = [[0] * n for _ in range(n)]
        for w in words:
            for u, c in gen_times(k, w).items():
                m[index[u]][index[w]] = c % p
        mats.append(m)
    parity = [len(w) % 2 for w in words]
    return mats, parity


def _subsets(r, n):
    from itertools import combinations

    return list(combinations(range(r), n))


def brute_force_classify(qs: QuadraticSpace) -> tuple[str, bool]:
    """Decide type M/Q by exhaustive search in the regular supermodule.

    Builds the ``2^r``-dimensional Clifford superalgebra from its defining
    relations, forms every cyclic submodule generated by a homogeneous vector
    (every super-submodule contains one), keeps the inclusion-minimal ones
    (the simple super-submodules), then compares them by solving for even and
    odd module maps.  Returns ``(type, unique_up_to_parity)``.
    """
    F = qs.mode
    if not isinstance(F, PrimeField):
        raise InstanceTooLarge("brute force needs a PrimeField mode")
    p, r = F.p, qs.dim
    if r > BRUTE_MAX_R or p > BRUTE_MAX_P:
        raise InstanceTooLarge(f"brute force limited to r <= {BRUTE_MAX_R}, p <= {BRUTE_MAX_P}")

    from sympy import GF
    from sympy.polys.matrices import DomainMatrix

    K = GF(p)
    gram = [[int(x) % p for x in row] for row in qs.gram]
    inv2 = pow(2, -1, p)
    half = [gram[k][k] * inv2 % p for k in range(r)]
    mats, parity = _clifford_left_mult(gram, half, p, r)
    n = len(parity)
    # left multiplication by every normal-ordered monomial spans the algebra
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    monomials = []
    for size_ in range(r + 1):
        for w in _subsets(r, size_):
            m = ident
            for k in reversed(w):
                g = mats[k]
                m = [[sum(g[i][t] * m[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
            monomials.append(m)

    def rref_rows(rows):
        if not rows:
            return ()
        dm = DomainMatrix([[K(x) for x in row] for row in rows], (len(rows), n), K)
        red, piv = dm.rref()
        lst = red.to_Matrix().tolist()
        return tuple(tuple(int(x) % p for x in lst[i]) for i in range(len(piv)))

    words_by_parity = {0: [i for i in range(n) if parity[i] == 0], 1: [i for i in range(n) if parity[i] == 1]}

    cyclic = set()
    for par, idx in words_by_parity.items():
        for coeffs in product(range(p), repeat=len(idx)):
            nz = next((c for c in coeffs if c), 0)
            if nz != 1:
                continue  # zero vector, or not normalized up to scalar
            v = [0] * n
            for i, c in zip(idx, coeffs):
                v[i] = c
            rows = [
                [sum(a[i][k] * v[k] for k in range(n)) % p for i in range(n)] for a in monomials
            ]
            cyclic.add(rref_rows(rows))

    cyclic = sorted(cyclic, key=len)

    def contains(big, small):
        return len(rref_rows(list(big) + list(small))) == len(big)

    simples = [
        c for c in cyclic
        if not any(len(o) < len(c) and contains(c, o) for o in cyclic)
    ]

    def module_data(sub):
        # homogeneous basis: projections onto even / odd coordinates
        even = rref_rows([[x if parity[i] == 0 else 0 for i, x in enumerate(row)] for row in sub])
        odd = rref_rows([[x if parity[i] == 1 else 0 for i, x in enumerate(row)] for row in sub])
        basis = list(even) + list(odd)
        bmat = DomainMatrix([[K(x) for x in row] for row in basis], (len(basis), n), K).transpose()
        acts = []
        for g in mats:
            images = [[sum(g[i][k] * row[k] for k in range(n)) % p for i in range(n)] for row in basis]
            rhs = DomainMatrix([[K(x) for x in img] for img in images], (len(images), n), K).transpose()
            # solve bmat * X = rhs
            aug = bmat.hstack(rhs)
            red, piv = aug.rref()
            lst = red.to_Matrix().tolist()
            m = len(basis)
            sol = [[int(lst[i][m + j]) % p for j in range(m)] for i in range(m)]
            acts.append(sol)
        return len(even), len(basis), acts

    def hom_exists(a, b, odd_map):
        e1, n1, acts1 = a
        e2, n2, acts2 = b
        unknowns = [
            (i, j) for i in range(n2) for j in range(n1)
            if ((i < e2) == (j < e1)) != odd_map
        ]
        if not unknowns:
            return False
        col = {u: t for t, u in enumerate(unknowns)}
        eqs = []
        # F * rho1(g) - rho2(g) * F = 0
        for g1, g2 in zip(acts1, acts2):
            for i in range(n2):
                for j in range(n1):
                    row = [0] * len(unknowns)
                    for k in range(n1):
                        if (i, k) in col and g1[k][j]:
                            row[col[(i, k)]] = (row[col[(i, k)]] + g1[k][j]) % p
                    for k in range(n2):
                        if (k, j) in col and g2[i][k]:
                            row[col[(k, j)]] = (row[col[(k, j)]] - g2[i][k]) % p
                    if any(row):
                        eqs.append(row)
        if not eqs:
            return True
        dm = DomainMatrix([[K(x) for x in row] for row in eqs], (len(eqs), len(unknowns)), K)
        return dm.rank() < len(unknowns)

    data = [module_data(s) for s in simples]
    first = data[0]
    simple_type = "Q" if hom_exists(first, first, odd_map=True) else "M"
    unique = all(
        hom_exists(first, other, odd_map=False) or hom_exists(first, other, odd_map=True)
        for other in data[1:]
    )
    return simple_type, unique
