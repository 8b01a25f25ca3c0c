import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanclass import oracles
from jordanclass.exactnum import GF, ExactMatrix, Poly, jordan_data, matrix_centralizer_dim, symplectic_form
from jordanclass.jclass import LeviShape, enumerate_classes, induce, parse_slots, pattern_of
from jordanclass.loglike import (
    LogLikeMap,
    apply,
    batch_jordan_compat,
    batch_stratification,
    check_induction_compat,
    check_jordan_compat,
    check_stratification,
    etale_certificate,
    fiber_points,
    fiber_polynomial,
    minimal_levi_probe,
    probe_grid,
    sl2_char2_report,
    sp4_isolated_report,
)
from jordanclass.loglike.maps import gl_shift_inverse
from jordanclass.loglike.sampling import sample_element
from jordanclass.loglike.sl2char2 import F4, bracket, f4_mul, sl2
from jordanclass.loglike.sp4 import c2, lambda_subsystem, random_sp4, torus, torus_formula_check, torus_from_angles
from jordanclass.rootcore import TorusElement

seeds = st.integers(0, 2**32)


# -- the maps ------------------------------------------------------------------


def test_map_validation():
    assert LogLikeMap("gl", 3, 5).kind == "GLShift"
    with pytest.raises(ValueError):
        LogLikeMap("sl", 2, 2)
    with pytest.raises(ValueError):
        LogLikeMap("sp4", 4, 2)
    with pytest.raises(ValueError):
        LogLikeMap("sp4", 6, 7)
    with pytest.raises(ValueError):
        LogLikeMap("exp", 2, 7)
    with pytest.raises(ValueError):
        apply(LogLikeMap("gl", 2, 7), ExactMatrix.zero(GF(7), 2))
    with pytest.raises(ValueError):
        apply(LogLikeMap("sl", 2, 7), ExactMatrix.diag(GF(7), [2, 2]))


def test_map_examples():
    F = GF(7)
    assert apply(LogLikeMap("gl", 3, 7), ExactMatrix.identity(F, 3)).is_zero()
    s = ExactMatrix.diag(F, [1, -1, 1, -1])
    assert apply(LogLikeMap("sp4", 4, 7), s).is_zero()
    # (a - 1/a)/2 for a = 3 over F_7: (3 - 5) * 4 = -8 = 6
    x = apply(LogLikeMap("sp4", 4, 7), torus(F, 3, 1))
    assert x == ExactMatrix.diag(F, [6, 0, 1, 0])


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_sp4_torus_formula(p):
    for a in range(1, p):
        for b in range(1, p):
            assert torus_formula_check(p, a, b)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["gl", "sl"]), st.integers(2, 4), st.sampled_from([5, 7, 101]), seeds)
def test_equivariance(kind, n, p, seed):
    if kind == "sl" and n % p == 0:
        return
    rng = random.Random(seed)
    lam = LogLikeMap(kind, n, p)
    F = lam.field
    j = rng.choice(enumerate_classes(n, "group"))
    got = sample_element(F, j, rng, det_one=kind == "sl")
    if got is None:
        return
    g = got[0]
    h = ExactMatrix.random_invertible(F, n, rng)
    assert apply(lam, g.conjugate_by(h)) == apply(lam, g).conjugate_by(h)
    assert lam.in_algebra(apply(lam, g))
    # the centralizer of g sits inside the centralizer of its image
    assert matrix_centralizer_dim(apply(lam, g)) >= matrix_centralizer_dim(g)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7, 13]), seeds)
def test_sp4_equivariance_and_image(p, seed):
    rng = random.Random(seed)
    F = GF(p)
    lam = LogLikeMap("sp4", 4, p)
    g, h = random_sp4(F, rng), random_sp4(F, rng)
    assert lam.in_group(g) and lam.in_group(h)
    x = apply(lam, g)
    J = symplectic_form(F, 4)
    assert (x.T @ J + J @ x).is_zero()
    assert apply(lam, g.conjugate_by(h)) == x.conjugate_by(h)
    assert matrix_centralizer_dim(x, "sp") >= matrix_centralizer_dim(g, "sp")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.sampled_from([3, 7, 101]), seeds)
def test_gl_shift_round_trip(n, p, seed):
    rng = random.Random(seed)
    F = GF(p)
    lam = LogLikeMap("gl", n, p)
    x = ExactMatrix.random(F, n, rng)
    assert lam.in_image_locus(x) == (x.shift(-1).det() != 0)
    if lam.in_image_locus(x):
        assert apply(lam, gl_shift_inverse(x)) == x
    g = ExactMatrix.random_invertible(F, n, rng)
    assert gl_shift_inverse(apply(lam, g)) == g


# -- étale certificates --------------------------------------------------------


def test_etale_examples():
    F = GF(7)
    c = etale_certificate(2, 7, ExactMatrix.zero(F, 2))
    assert c.in_locus and c.fiber_size == 2
    assert [g.det() for g in fiber_points(ExactMatrix.zero(F, 2))] == [1, 1]
    with pytest.raises(ValueError):
        etale_certificate(2, 2, ExactMatrix.zero(GF(2), 2))
    with pytest.raises(ValueError):
        etale_certificate(2, 7, ExactMatrix.diag(F, [1, 1]))
    x = ExactMatrix.unit(F, 2, 0, 1)
    c = etale_certificate(2, 7, x)
    assert c.fiber_poly == Poly(F, [-1, 0, 1])
    # Res(t^2 - 1, 2t) = -4 = 3 mod 7 by the hand Sylvester expansion
    assert c.resultant_value == 3 and c.in_locus


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 3), st.sampled_from([5, 7, 11, 13]), seeds)
def test_fiber_matches_root_search(n, p, seed):
    x = oracles.random_trace_zero(n, p, random.Random(seed))
    c = etale_certificate(n, p, x)
    f = fiber_polynomial(x)
    assert c.fiber_size == oracles.roots_in_closure_count(f)
    assert c.in_locus == (c.resultant_value != 0) == (c.fiber_size == n)
    F = GF(p)
    rational = [t for t in range(p) if f(t) == 0]
    pts = fiber_points(x)
    assert len(pts) == len(rational)
    for g in pts:
        assert g.det() == 1 and apply(LogLikeMap("sl", n, p), g) == x


# -- Jordan compatibility ------------------------------------------------------


def test_unipotent_maps_to_nilpotent():
    F = GF(101)
    u = ExactMatrix.block_diag(F, [ExactMatrix.jordan_block(F, 1, 3), ExactMatrix.jordan_block(F, 1, 1)])
    assert apply(LogLikeMap("gl", 4, 101), u).is_nilpotent()


def test_jordan_compat_named_case():
    F = GF(101)
    g = ExactMatrix.block_diag(F, [ExactMatrix.diag(F, [2]), ExactMatrix.jordan_block(F, 3, 2)])
    g = g.conjugate_by(ExactMatrix.random_invertible(F, 3, random.Random(5)))
    r = check_jordan_compat(LogLikeMap("gl", 3, 101), g)
    assert r.ok
    assert dict(r.image.blocks) == {1: (1,), 2: (2,)}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sp4_torus_images_semisimple(p):
    F = GF(p)
    lam = LogLikeMap("sp4", 4, p)
    for a in range(1, p):
        for b in range(1, p):
            r = check_jordan_compat(lam, torus(F, a, b))
            assert r.ok


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), seeds)
def test_jordan_compat_sampled(n, seed):
    rep = batch_jordan_compat(LogLikeMap("gl", n, 101), 5, seed)
    assert rep.passed and rep.samples == 5


def test_stratification_examples():
    rng = random.Random(11)
    F = GF(101)
    lam = LogLikeMap("gl", 4, 101)
    j = parse_slots("2:2;1:1;1:1", "group")
    g1, _ = sample_element(F, j, rng)
    g2, _ = sample_element(F, j, rng)
    assert check_stratification(lam, g1, g1.conjugate_by(ExactMatrix.random_invertible(F, 4, rng)))
    assert check_stratification(lam, g1, g2)
    assert batch_stratification(LogLikeMap("sl", 3, 7), 40, 3).passed


def test_stratification_rejects_outside_locus():
    F = GF(7)
    lam = LogLikeMap("sl", 2, 7)
    # look for a rational fiber point over a ramified x
    rng = random.Random(0)
    for _ in range(500):
        x = oracles.random_trace_zero(2, 7, rng)
        pts = fiber_points(x)
        if pts and not etale_certificate(2, 7, x).in_locus:
            with pytest.raises(ValueError):
                check_stratification(lam, pts[0], pts[0])
            return
    pytest.fail("no ramified rational point found")


@pytest.mark.parametrize("n", range(1, 6))
def test_gl_shift_patterns_identity(n):
    # eigenvalue shift a -> a - 1 is a bijection, so patterns are preserved
    rng = random.Random(n)
    F = GF(101)
    lam = LogLikeMap("gl", n, 101)
    for j in enumerate_classes(n, "group"):
        got = sample_element(F, j, rng)
        g, jd = got
        assert pattern_of(jordan_data(apply(lam, g))).slots == pattern_of(jd).slots == j.slots


def test_induction_compat_examples():
    lam = LogLikeMap("gl", 5, 101)
    assert check_induction_compat(LogLikeMap("gl", 3, 101), LeviShape((1, 1, 1), ((1,), (1,), (1,))))
    assert check_induction_compat(LogLikeMap("gl", 3, 101), LeviShape((2, 1), ((1, 1), (1,))))
    ls = LeviShape((3, 2), ((2, 1), (2,)))
    assert check_induction_compat(lam, ls) and induce(ls) == (4, 1)


# -- Sp4 -----------------------------------------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_sp4_isolated_report(p):
    r = sp4_isolated_report(p)
    assert r.ok
    assert r.centralizer_dim == 6 and r.orbit_dim == 4 and r.image_orbit_dim == 0
    assert r.phi_s_type == "A1+A1" and r.closure_type == "C2"
    with pytest.raises(ValueError):
        sp4_isolated_report(2)


def test_minimal_levi_probe_examples():
    rs = c2()
    s = TorusElement.multiplicative((0, Fraction(1, 2)), 7, basis="epsilon")
    img = lambda_subsystem(apply(LogLikeMap("sp4", 4, 7), torus_from_angles(7, (0, Fraction(1, 2)))))
    assert minimal_levi_probe(rs, s, img).agrees
    # a regular element: both sides empty
    theta = (Fraction(1, 12), Fraction(1, 3))
    s = TorusElement.multiplicative(theta, 13, basis="epsilon")
    img = lambda_subsystem(apply(LogLikeMap("sp4", 4, 13), torus_from_angles(13, theta)))
    v = minimal_levi_probe(rs, s, img)
    assert len(v.centralizer) == 0 and len(v.lambda_image) == 0 and v.agrees
    with pytest.raises(ValueError):
        minimal_levi_probe(rs, TorusElement.additive((0, 0)), img)


def test_minimal_levi_grid_table():
    # frozen from a run of the grid; disagreements are data, not failures
    table = probe_grid((3, 5, 7), 12)
    assert len(table.rows) == 4 + 16 + 49 - 13 == 56
    assert table.agreeing == 48
    p, theta, v = next(r for r in table.rows if not r[2].agrees)
    assert (p, theta) == (7, (Fraction(1, 6), Fraction(1, 3)))
    assert v.centralizer.type_label() == "∅" and v.lambda_image.type_label() == "~A1"


def test_minimal_levi_witness_by_hand():
    # a = 3^1 = 3, b = 3^2 = 2 in F_7: lambda(s) = diag(x, y, -x, -y) with
    # x = (3 - 5)/2 = 6 and y = (2 - 4)/2 = 6, so the e1 - e2 root vector commutes with it
    F = GF(7)
    x = apply(LogLikeMap("sp4", 4, 7), torus_from_angles(7, (Fraction(1, 6), Fraction(1, 3))))
    assert x == ExactMatrix.diag(F, [6, 6, 1, 1])
    assert torus_from_angles(7, (Fraction(1, 6), Fraction(1, 3))) == torus(F, 3, 2)


# -- sl2 in characteristic 2 ---------------------------------------------------


def test_f4_is_a_field():
    for a in F4:
        for b in F4:
            assert f4_mul(a, b) == f4_mul(b, a)
            for c in F4:
                assert f4_mul(a, f4_mul(b, c)) == f4_mul(f4_mul(a, b), c)
                assert f4_mul(a, b ^ c) == f4_mul(a, b) ^ f4_mul(a, c)
    assert sorted(f4_mul(2, x) for x in F4) == [0, 1, 2, 3]
    assert f4_mul(2, 2) == 3  # w^2 = w + 1


def test_sl2_char2_report():
    r = sl2_char2_report()
    assert r.ok and r.elements == 64
    assert r.ad_nilpotent and r.level_dims == (0, 2) and r.noncentral_centralizer_dim == 1
    d = r.to_json()
    assert d["ok"] and "conclusion" in d


def test_sl2_char2_ad_cube_by_hand():
    g = sl2(F4)
    for x in g:
        for y in g:
            z = bracket(x, bracket(x, bracket(x, y)))
            assert not any(z)
