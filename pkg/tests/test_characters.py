import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hw, poly, random_dominant_gl, random_dominant_typea, tableaux_schur
from superweyl import (
    CharacterPoly,
    HalfWeight,
    RootDatum,
    build_group,
    coefficient,
    dim_eval,
    even_character,
    gl_super_character,
    induced_dim_bound,
    leq,
    maximal_weight_check,
    mono,
    odd_factor,
    periplectic_variants,
    polarize,
    schur,
    super_character,
    super_character_rho_form,
    weyl_dimension,
    weyl_elements,
    weyl_numerator,
)
from superweyl.errors import (
    LambdaNotInSupport,
    NoParabolic,
    NotDominant,
    NotPartition,
    RhoOddNotInvariant,
)


def pure_even_a1():
    a = hw(1, -1)
    return RootDatum(
        name="A1",
        rank=2,
        even_roots=(a, -a),
        coroot={a: (1, -1), -a: (-1, 1)},
        odd_roots={},
        simple_even_roots=(a,),
    )


def t(rank, *exp):
    return mono(HalfWeight.of(exp))


# weyl_numerator


def test_numerator_examples(gl21):
    rho0 = gl21.rho_even
    assert rho0 == hw("1/2", "-1/2", 0)
    assert weyl_numerator(gl21, rho0) == poly(3, {("1/2", "-1/2", 0): 1, ("-1/2", "1/2", 0): -1})
    assert weyl_numerator(gl21, hw(1, 1, 0)).is_zero()
    q1 = polarize(build_group("q:1"))
    assert weyl_numerator(q1, hw(5)) == mono(hw(5))


# even_character


def test_even_character_examples(gl21, p2):
    assert even_character(gl21, hw(1, 0, 0)) == poly(3, {(1, 0, 0): 1, (0, 1, 0): 1})
    for spec in ["gl:2,1", "p:3", "q:2", "gl:1,1"]:
        pd = polarize(build_group(spec))
        assert even_character(pd, HalfWeight.zero(pd.rank)) == CharacterPoly.one(pd.rank)
    assert even_character(p2, hw(2, 1)) == poly(2, {(2, 1): 1, (1, 2): 1})


def test_even_character_not_dominant(gl21):
    with pytest.raises(NotDominant):
        even_character(gl21, hw(0, 1, 0))


# odd_factor


def test_odd_factor_examples(gl21, p2):
    one = CharacterPoly.one(3)
    assert odd_factor(gl21) == (one + t(3, -1, 0, 1)) * (one + t(3, 0, -1, 1))
    assert odd_factor(polarize(pure_even_a1())) == CharacterPoly.one(2)
    assert odd_factor(p2) == CharacterPoly.one(2) + t(2, 1, 1)


def test_odd_factor_multiplicity():
    a = hw(1, -1)
    base = pure_even_a1()
    d = RootDatum(
        name="mult",
        rank=2,
        even_roots=base.even_roots,
        coroot=base.coroot,
        odd_roots={hw(-1, 0): 2},
        simple_even_roots=(a,),
    )
    pd = polarize(d)
    one = CharacterPoly.one(2)
    assert odd_factor(pd) == (one + t(2, 1, 0)) ** 2
    assert pd.rho_odd == hw(-1, 0)


# super_character


def test_super_character_gl11():
    pd = polarize(build_group("gl:1,1"))
    rep = super_character(pd, hw(1, 0))
    assert rep.super_char == poly(2, {(1, 0): 1, (0, 1): 1})
    assert rep.super_dim == 2 and rep.even_dim == 1 and rep.top_weight_ok


def test_super_character_gl21(gl21):
    rep = super_character(gl21, hw(1, 0, 0))
    one = CharacterPoly.one(3)
    expected = (t(3, 1, 0, 0) + t(3, 0, 1, 0)) * (one + t(3, -1, 0, 1)) * (one + t(3, 0, -1, 1))
    assert rep.super_char == expected
    assert rep.super_dim == 8 and rep.even_dim == 2
    assert rep.top_weight_ok and rep.n_lambda == 1 and not rep.euler_only
    assert rep.super_char == rep.even_char * rep.odd_factor


def test_super_character_errors(gl21):
    with pytest.raises(NotDominant):
        super_character(gl21, hw(0, 1, 0))
    q2 = polarize(build_group("q:2"))
    with pytest.raises(NoParabolic):
        super_character(q2, hw(1, 0))
    bad = polarize(build_group("gl:2,1"), [-1, -3, -2])
    with pytest.raises(NoParabolic):
        super_character(bad, hw(1, 0, 0))


def test_force_labels_euler_characteristic():
    q2 = polarize(build_group("q:2"))
    rep = super_character(q2, hw(1, 0), force=True)
    assert rep.euler_only
    assert rep.to_record()["note"] == "Euler characteristic only"
    # odd Cartan is nonzero: n_lambda comes from the closed-field simple dimension
    assert rep.n_lambda == 2


def test_report_record_keys(gl21):
    rec = super_character(gl21, hw(1, 0, 0)).to_record()
    assert list(rec) == ["lambda", "even_char", "odd_factor", "super_char", "even_dim", "super_dim", "top_weight_ok"]
    assert rec["lambda"] == [1, 0, 0]


# rho form


def test_rho_form_gl11():
    pd = polarize(build_group("gl:1,1"))
    assert pd.rho == hw("-1/2", "1/2")
    assert super_character_rho_form(pd, hw(1, 0)) == poly(2, {(1, 0): 1, (0, 1): 1})


def test_rho_form_matches(gl21, p3):
    assert super_character_rho_form(gl21, hw(1, 0, 0)) == super_character(gl21, hw(1, 0, 0)).super_char
    assert super_character_rho_form(p3, hw(1, 1, 1)) == super_character(p3, hw(1, 1, 1)).super_char


def test_rho_form_requires_invariance():
    # one odd root breaks the Weyl symmetry of rho_1
    base = pure_even_a1()
    d = RootDatum(
        name="skew",
        rank=2,
        even_roots=base.even_roots,
        coroot=base.coroot,
        odd_roots={hw(-1, 0): 1},
        simple_even_roots=base.simple_even_roots,
    )
    with pytest.raises(RhoOddNotInvariant):
        super_character_rho_form(polarize(d), hw(0, 0))


# schur


def test_schur_examples():
    assert schur((1, 0), 2) == poly(2, {(1, 0): 1, (0, 1): 1})
    assert schur((2, 1), 2) == poly(2, {(2, 1): 1, (1, 2): 1})
    assert schur((), 1) == CharacterPoly.one(1)
    assert schur((1, 1, 1), 2).is_zero()


def test_schur_bad_partitions():
    with pytest.raises(NotPartition):
        schur((0, 1), 2)
    with pytest.raises(NotPartition):
        schur((1, 0, -1), 2)


def test_schur_negative_parts():
    # s_{(0,-1)}(t1,t2) = 1/t1 + 1/t2
    assert schur((0, -1), 2) == poly(2, {(-1, 0): 1, (0, -1): 1})


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_schur_matches_tableaux(k):
    rng = random.Random(k)
    for _ in range(25):
        lam = sorted((rng.randint(-2, 3) for _ in range(k)), reverse=True)
        assert schur(lam, k) == tableaux_schur(lam, k)


def test_schur_offset_rank():
    s = schur((1,), 1, offset=2, rank=3)
    assert s == t(3, 0, 0, 1)


# gl_super_character


def test_gl_super_character_examples():
    one3 = CharacterPoly.one(3)
    odd = (one3 + t(3, -1, 0, 1)) * (one3 + t(3, 0, -1, 1))
    assert gl_super_character(1, 1, (1, 0)) == poly(2, {(1, 0): 1, (0, 1): 1})
    assert gl_super_character(2, 1, (2, 1, 0)) == (t(3, 2, 1, 0) + t(3, 1, 2, 0)) * odd
    assert gl_super_character(2, 1, (0, 0, 0)) == odd
    with pytest.raises(NotDominant):
        gl_super_character(2, 1, (0, 1, 0))


# maximal weight / dimension bound


def test_maximal_weight_examples(gl21):
    ch = super_character(gl21, hw(1, 0, 0)).super_char
    assert maximal_weight_check(gl21, hw(1, 0, 0), ch)
    assert maximal_weight_check(gl21, hw(3, -2, 4), mono(hw(3, -2, 4)))
    # (0,1,0) does occur in this character, strictly below (1,0,0)
    assert coefficient(ch, hw(0, 1, 0)) == 1
    assert not maximal_weight_check(gl21, hw(0, 1, 0), ch)
    with pytest.raises(LambdaNotInSupport):
        maximal_weight_check(gl21, hw(0, 0, 5), ch)


def test_maximal_weight_detects_higher(gl21):
    ch = mono(hw(1, 0, 0)) + mono(hw(2, -1, 0))
    assert not maximal_weight_check(gl21, hw(1, 0, 0), ch)


def test_induced_dim_bound(gl21, p2):
    assert induced_dim_bound(gl21, hw(1, 0, 0))
    assert induced_dim_bound(polarize(pure_even_a1()), hw(0, 0))
    assert induced_dim_bound(p2, hw(1, 0))
    assert induced_dim_bound(polarize(build_group("q:2")), hw(3, 1))
    with pytest.raises(NotDominant):
        induced_dim_bound(gl21, hw(0, 1, 0))


# periplectic variants


def test_periplectic_variants_p2(p2):
    variants = {v.label: v for v in periplectic_variants(p2, hw(1, 0))}
    one = CharacterPoly.one(2)
    assert variants["literal"].odd_factor == one + t(2, 1, 1)
    assert variants["printed"].odd_factor == one + t(2, -1, -1)
    assert variants["literal"].super_char == super_character(p2, hw(1, 0)).super_char
    assert variants["literal"].maximal_weight_ok is True
    assert variants["printed"].maximal_weight_ok is False
    assert variants["literal"].super_dim == variants["printed"].super_dim == 4


# properties

ALL = ["gl:1,1", "gl:2,1", "gl:1,2", "gl:3,1", "gl:2,2", "gl:1,3", "gl:3,2", "q:2", "q:3", "p:2", "p:3", "p:4"]


@pytest.mark.parametrize("spec", ALL)
def test_denominator_identity(spec):
    pd = polarize(build_group(spec))
    one = CharacterPoly.one(pd.rank)
    rhs = mono(pd.rho_even)
    for a in pd.pos_even:
        rhs = rhs * (one - mono(-a))
    assert weyl_numerator(pd, pd.rho_even) == rhs


@pytest.mark.parametrize("spec", ["gl:2,1", "gl:3,1", "gl:2,2", "p:3", "p:4"])
def test_numerator_antisymmetry(spec):
    pd = polarize(build_group(spec))
    rng = random.Random(spec)
    ws = weyl_elements(pd)
    for _ in range(10):
        mu = HalfWeight(tuple(rng.randint(-6, 6) for _ in range(pd.rank)))
        a = weyl_numerator(pd, mu)
        for w in ws:
            assert weyl_numerator(pd, w.act(mu)) == w.sign * a


@pytest.mark.parametrize("spec", ["gl:2,1", "gl:3,1", "gl:2,2", "p:3", "p:4"])
def test_even_character_weyl_invariant_and_below_lambda(spec):
    pd = polarize(build_group(spec))
    rng = random.Random(spec)
    ws = weyl_elements(pd)
    for _ in range(8):
        lam = _random_dominant(spec, pd, rng)
        ch = even_character(pd, lam)
        assert coefficient(ch, lam) == 1
        assert all(mu.is_integral() for mu in ch.support())
        for w in ws:
            assert ch.map_exponents(lambda k, w=w: w.act(HalfWeight(k)).doubled) == ch
        for mu in ch.support():
            assert leq(pd, mu, lam)


def _random_dominant(spec, pd, rng, lo=-3, hi=3):
    if spec.startswith("gl:"):
        m = int(spec[3:].split(",")[0])
        return random_dominant_gl(rng, m, pd.rank - m, lo, hi)
    return random_dominant_typea(rng, pd.rank, lo, hi)


@pytest.mark.parametrize("spec", ["gl:2,1", "gl:3,1", "gl:2,2", "gl:3,2", "p:2", "p:3", "p:4", "q:3"])
def test_weyl_dimension_formula(spec):
    pd = polarize(build_group(spec))
    rng = random.Random("dim" + spec)
    for _ in range(15):
        lam = _random_dominant(spec, pd, rng)
        expected = Fraction(1)
        for a in pd.pos_even:
            cv = pd.datum.coroot[a]
            expected *= (lam + pd.rho_even).pair(cv) / pd.rho_even.pair(cv)
        assert expected.denominator == 1
        assert weyl_dimension(pd, lam) == expected
        assert dim_eval(even_character(pd, lam)) == expected


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_gl_oracle_against_tableaux(m, n):
    pd = polarize(build_group(f"gl:{m},{n}"))
    rng = random.Random(m * 10 + n)
    for _ in range(10):
        lam = random_dominant_gl(rng, m, n)
        c = lam.integer_coords()
        even = tableaux_schur(c[:m], m, 0, m + n) * tableaux_schur(c[m:], n, m, m + n)
        rep = super_character(pd, lam)
        assert rep.even_char == even
        assert rep.super_char == gl_super_character(m, n, lam)
        assert rep.super_dim == rep.even_dim * 2 ** (m * n)
        assert rep.top_weight_ok


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_p3_rho_form_property(coords):
    pd = polarize(build_group("p:3"))
    lam = HalfWeight.of(sorted(coords, reverse=True))
    assert super_character_rho_form(pd, lam) == super_character(pd, lam).super_char
