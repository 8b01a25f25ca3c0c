import random
from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanclass.exactnum import (
    GF,
    QQ,
    ExactMatrix,
    JordanData,
    NonSplitSpectrum,
    Poly,
    ambient_basis,
    char_poly,
    distinct_root_count,
    eigenvalues,
    format_matrix,
    in_ambient,
    is_prime,
    is_semisimple,
    jordan_chevalley,
    jordan_data,
    jordan_matrix,
    matrix_centralizer_dim,
    multiplicative_jordan,
    parse_matrix,
    random_conjugate,
    resultant,
    roots,
    squarefree_decomposition,
)
from jordanclass.exactnum import linalg
from jordanclass.exactnum.poly import pth_root, sylvester_matrix

t = sympy.Symbol("t")


def _sympy_poly(f: Poly):
    return sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(f.coeffs))


# -- fields ------------------------------------------------------------------


def test_field_basics():
    F = GF(7)
    assert F(-1) == 6 and F.inv(3) == 5 and F.div(1, 2) == 4
    assert QQ("1/3") == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ValueError):
        GF(9)
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


# -- characteristic polynomial -------------------------------------------------


def test_char_poly_examples():
    assert char_poly(ExactMatrix.zero(QQ, 2)) == Poly(QQ, [0, 0, 1])
    assert char_poly(ExactMatrix.diag(QQ, [1, 2])) == Poly(QQ, [2, -3, 1])
    f = Poly(GF(5), [-1, -1, 0, 1])
    assert char_poly(ExactMatrix.companion(f)) == f


small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def qq_matrices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return ExactMatrix(QQ, [[draw(small_q) for _ in range(n)] for _ in range(n)])


@st.composite
def gf_matrices(draw, primes=(2, 3, 5, 7, 101), max_n=5):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(1, max_n))
    F = GF(p)
    return ExactMatrix(F, [[draw(st.integers(0, p - 1)) for _ in range(n)] for _ in range(n)])


@settings(max_examples=60, deadline=None)
@given(qq_matrices())
def test_char_poly_matches_sympy(m):
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])
    assert sympy.expand(_sympy_poly(char_poly(m)) - M.charpoly(t).as_expr()) == 0


@settings(max_examples=60, deadline=None)
@given(gf_matrices(), st.integers(0, 2**32))
def test_char_poly_conjugation_invariant(m, seed):
    g = random_conjugate(m, random.Random(seed))
    assert char_poly(g) == char_poly(m)


@settings(max_examples=40, deadline=None)
@given(gf_matrices())
def test_cayley_hamilton(m):
    f = char_poly(m)
    acc = ExactMatrix.zero(m.field, m.n)
    for c in reversed(f.coeffs):
        acc = acc @ m + ExactMatrix.scalar(m.field, m.n, c)
    assert acc.is_zero()


# -- rank and determinant ------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(qq_matrices())
def test_rank_det_match_sympy(m):
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])
    assert m.rank() == M.rank()
    assert m.det() == Fraction(str(M.det()))


@settings(max_examples=40, deadline=None)
@given(gf_matrices(primes=(2, 3), max_n=3))
def test_rank_mod_p_by_kernel_count(m):
    # |ker m| = p^(n - rank), counted over all vectors
    F, n = m.field, m.n
    ker = sum(
        1 for v in product(range(F.p), repeat=n) if all(sum(r[j] * v[j] for j in range(n)) % F.p == 0 for r in m.rows)
    )
    assert ker == F.p ** (n - m.rank())


@settings(max_examples=40, deadline=None)
@given(gf_matrices())
def test_inverse_round_trip(m):
    if m.det() == 0:
        with pytest.raises(ZeroDivisionError):
            m.inverse()
    else:
        assert m @ m.inverse() == ExactMatrix.identity(m.field, m.n)


def test_kernel_dimension():
    F = GF(5)
    rows = [[1, 2, 3], [2, 4, 6]]
    ker = linalg.kernel(rows, F, 3)
    assert len(ker) == 2
    assert all(sum(r[j] * v[j] for j in range(3)) % 5 == 0 for r in rows for v in ker)


# -- resultants and roots ------------------------------------------------------


def test_resultant_examples():
    # hand expansion of the 3x3 Sylvester determinant of t^2 - 1 and 2t
    # | 1 0 -1 |
    # | 2 0  0 |  = 1*(0*2 - 0*0) - 0 + (-1)*(2*2 - 0) = -4
    # | 0 2  0 |
    f, g = Poly(QQ, [-1, 0, 1]), Poly(QQ, [0, 2])
    assert sylvester_matrix(f, g) == [[1, 0, -1], [2, 0, 0], [0, 2, 0]]
    assert resultant(f, g) == -4
    assert resultant(Poly(GF(7), [-1, 0, 1]), Poly(GF(7), [0, 2])) == 3
    h = Poly.from_roots(QQ, [1, 1, 3])
    assert resultant(h, h.derivative()) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20))
def test_resultant_linear(a, b):
    # det [[1, -a], [1, -b]]
    assert resultant(Poly(QQ, [-a, 1]), Poly(QQ, [-b, 1])) == a - b


qq_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=5).map(lambda cs: Poly(QQ, cs))


def _sylvester_det(f: Poly, g: Poly):
    # rows: deg g shifts of f, then deg f shifts of g, highest coefficient first
    m, n = f.degree, g.degree
    fc, gc = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    rows = [[0] * i + fc + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + gc + [0] * (m - 1 - i) for i in range(m)]
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    return Fraction(str(M.det()))


@settings(max_examples=60, deadline=None)
@given(qq_polys, qq_polys)
def test_resultant_matches_sylvester_det(f, g):
    if f.degree < 1 or g.degree < 1:
        return
    assert resultant(f, g) == _sylvester_det(f, g)


@settings(max_examples=60, deadline=None)
@given(st.integers(-4, 4).filter(bool), st.lists(st.integers(-5, 5), min_size=1, max_size=4), qq_polys)
def test_resultant_root_product(c, rs, g):
    # Res(c * prod(t - r), g) = c^deg g * prod g(r)
    if g.degree < 1:
        return
    f = Poly.from_roots(QQ, rs) * Poly.const(QQ, c)
    want = Fraction(c) ** g.degree
    for r in rs:
        want *= g(QQ(r))
    assert resultant(f, g) == want


def test_distinct_root_count_examples():
    assert distinct_root_count(Poly(QQ, [-1, 0, 1])) == 2
    assert distinct_root_count(Poly(GF(3), [-1, 0, 1])) == 2
    assert distinct_root_count(Poly(GF(2), [-1, 0, 1])) == 1
    # t^3 - 1 over F_7: derivative 3t^2 shares no root with it
    assert distinct_root_count(Poly(GF(7), [-1, 0, 0, 1])) == 3
    # t^p - t has no repeated root; t^p - 1 = (t - 1)^p
    assert distinct_root_count(Poly(GF(5), [0, -1, 0, 0, 0, 1])) == 5
    assert distinct_root_count(Poly(GF(5), [-1, 0, 0, 0, 0, 1])) == 1


def test_pth_root_and_squarefree():
    F = GF(3)
    f = Poly(F, [1, 0, 0, 1])  # t^3 + 1 = (t + 1)^3
    assert pth_root(f) == Poly(F, [1, 1])
    assert squarefree_decomposition(f) == [(Poly(F, [1, 1]), 3)]
    g = Poly.from_roots(F, [1, 1, 2])
    prod = Poly.const(F, 1)
    for h, k in squarefree_decomposition(g):
        prod = prod * h**k
    assert prod == g.monic()


gf_polys = st.builds(
    lambda p, cs: Poly(GF(p), cs),
    st.sampled_from([2, 3, 5, 7]),
    st.lists(st.integers(0, 6), min_size=2, max_size=7),
)


@settings(max_examples=100, deadline=None)
@given(gf_polys)
def test_resultant_zero_iff_repeated_root(f):
    if f.degree < 1:
        return
    # over the closure of F_p: a repeated root iff f and f' have a common factor
    repeated = distinct_root_count(f) < f.degree
    assert (resultant(f, f.derivative()) == 0) == repeated or f.derivative().degree < 0


@settings(max_examples=60, deadline=None)
@given(gf_polys)
def test_roots_by_evaluation(f):
    if f.degree < 1:
        return
    F = f.field
    rs = roots(f)
    assert set(rs) == {a for a in range(F.p) if f(a) == 0}
    for a, k in rs.items():
        lin = Poly(F, [-a, 1])
        assert (f % lin**k).degree < 0 and (f % lin ** (k + 1)).degree >= 0


def test_rational_roots():
    f = Poly.from_roots(QQ, [Fraction(1, 2), Fraction(1, 2), -3])
    assert roots(f) == {Fraction(1, 2): 2, Fraction(-3): 1}


# -- Jordan data ---------------------------------------------------------------


def test_jordan_examples():
    F = QQ
    jd = jordan_data(ExactMatrix.jordan_block(F, 0, 3))
    assert jd.blocks == ((0, (3,)),)
    jd = jordan_data(ExactMatrix.diag(GF(7), [1, 1, 2]))
    assert dict(jd.blocks) == {1: (1, 1), 2: (1,)}


def test_jordan_round_trip_named_case():
    F = GF(101)
    a, b = 17, 40
    m = ExactMatrix.block_diag(F, [ExactMatrix.jordan_block(F, a, 2), ExactMatrix.jordan_block(F, a, 1), ExactMatrix.jordan_block(F, b, 1)])
    g = random_conjugate(m, random.Random(3))
    assert dict(jordan_data(g).blocks) == {a: (2, 1), b: (1,)}


def test_non_split_spectrum():
    F = GF(7)
    f = Poly(F, [1, 0, 1])  # t^2 + 1 has no root mod 7
    with pytest.raises(NonSplitSpectrum):
        eigenvalues(ExactMatrix.companion(f))


partition_st = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(1, n), min_size=1, max_size=3).map(lambda xs: tuple(sorted(xs, reverse=True)))
)


@st.composite
def jordan_specs(draw):
    p = draw(st.sampled_from([5, 7, 101]))
    k = draw(st.integers(1, 3))
    eigs = draw(st.lists(st.integers(0, p - 1), min_size=k, max_size=k, unique=True))
    parts = [draw(partition_st) for _ in eigs]
    if sum(sum(x) for x in parts) > 7:
        parts = [(1,)] * k
    return JordanData(GF(p), tuple(zip(eigs, parts)))


@settings(max_examples=60, deadline=None)
@given(jordan_specs(), st.integers(0, 2**32))
def test_jordan_round_trip(jd, seed):
    g = random_conjugate(jordan_matrix(jd), random.Random(seed))
    got = jordan_data(g)
    assert dict(got.blocks) == dict(jd.blocks)
    # rank profile of (g - a)^k is decreasing and stabilizes at n minus the multiplicity of a
    for a, part in jd.blocks:
        ranks = [(g.shift(a) ** k).rank() for k in range(1, max(part) + 2)]
        assert ranks == sorted(ranks, reverse=True)
        assert ranks[-1] == ranks[-2] == g.n - sum(part)


@settings(max_examples=40, deadline=None)
@given(jordan_specs(), st.integers(0, 2**32))
def test_jordan_chevalley_parts(jd, seed):
    g = random_conjugate(jordan_matrix(jd), random.Random(seed))
    s, x = jordan_chevalley(g)
    assert s + x == g
    assert s @ x == x @ s
    assert x.is_nilpotent() and is_semisimple(s)
    assert dict(jordan_data(s).blocks) == {a: (1,) * sum(part) for a, part in jd.blocks}


@settings(max_examples=30, deadline=None)
@given(jordan_specs(), st.integers(0, 2**32))
def test_multiplicative_jordan(jd, seed):
    if any(a == 0 for a, _ in jd.blocks):
        return
    g = random_conjugate(jordan_matrix(jd), random.Random(seed))
    s, u = multiplicative_jordan(g)
    assert s @ u == g and s @ u == u @ s
    assert u.shift(1).is_nilpotent()


def test_jordan_data_json():
    jd = JordanData(GF(7), ((3, (2, 1)), (5, (1,))))
    assert JordanData.from_json(jd.to_json()) == jd
    with pytest.raises(ValueError):
        JordanData(GF(7), ((3, (1, 2)),))


# -- centralizers and ambients -------------------------------------------------


def test_centralizer_examples():
    F = GF(101)
    assert matrix_centralizer_dim(ExactMatrix.zero(F, 3)) == 9
    assert matrix_centralizer_dim(ExactMatrix.jordan_block(F, 0, 3)) == 3
    assert matrix_centralizer_dim(ExactMatrix.diag(GF(7), [1, -1, 1, -1]), "sp") == 6


def test_centralizer_by_brute_force():
    # count all 2x2 matrices over F_3 commuting with J_2(0): 3^dim of them
    F = GF(3)
    x = ExactMatrix.jordan_block(F, 0, 2)
    count = sum(1 for e in product(range(3), repeat=4) if (lambda y: x @ y == y @ x)(ExactMatrix(F, [e[:2], e[2:]])))
    assert count == 3 ** matrix_centralizer_dim(x)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_ambient_dimensions(n):
    F = GF(7)
    assert len(ambient_basis(F, n, "gl")) == n * n
    assert len(ambient_basis(F, n, "sl")) == n * n - 1
    assert len(ambient_basis(F, n, "sp")) == n * (n + 1) // 2
    assert all(in_ambient(b, "sp") for b in ambient_basis(F, n, "sp"))


@settings(max_examples=60, deadline=None)
@given(jordan_specs(), st.integers(0, 2**32))
def test_centralizer_dimension_formula(jd, seed):
    # sum over eigenvalues of the sum of squares of the conjugate partition
    g = random_conjugate(jordan_matrix(jd), random.Random(seed))
    want = 0
    for _, part in jd.blocks:
        conj = [sum(1 for x in part if x > i) for i in range(max(part))]
        want += sum(c * c for c in conj)
    assert matrix_centralizer_dim(g) == want


# -- matrix file format --------------------------------------------------------


def test_matrix_text_round_trip():
    m = ExactMatrix(GF(7), [[1, 2], [3, 4]])
    assert parse_matrix(format_matrix(m)) == m
    q = ExactMatrix(QQ, [[Fraction(1, 2), 0], [0, -3]])
    assert parse_matrix(format_matrix(q)) == q
    with pytest.raises(ValueError):
        parse_matrix("2 7\n1 2\n3\n")
    with pytest.raises(ValueError):
        parse_matrix("1 7\n1/2\n")
