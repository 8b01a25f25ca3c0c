from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanclass import oracles
from jordanclass.rootcore import (
    Subsystem,
    TorusElement,
    build_root_system,
    centralizer_subsystem,
    classify_prime,
    is_rationally_closed,
    levi_subsystem,
    parse_type,
    product,
    pseudo_levis,
    rational_closure,
)

ROOT_COUNTS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 5): 30, ("B", 2): 8, ("B", 3): 18, ("C", 3): 18,
    ("C", 4): 32, ("D", 4): 24, ("D", 5): 40, ("E", 6): 72, ("E", 7): 126, ("E", 8): 240,
    ("F", 4): 48, ("G", 2): 12,
}

SMALL_TYPES = ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2", "A1+A1", "A1+G2"]


@pytest.mark.parametrize("key,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(key, count):
    rs = build_root_system(*key)
    assert len(rs.roots) == count
    assert rs.n_positive * 2 == count


@pytest.mark.parametrize("key", sorted(ROOT_COUNTS))
def test_root_system_shape(key):
    rs = build_root_system(*key)
    l = rs.rank
    assert all(rs.cartan[i][i] == 2 for i in range(l))
    assert all(rs.cartan[i][j] in (0, -1, -2, -3) for i in range(l) for j in range(l) if i != j)
    for i, r in enumerate(rs.roots):
        assert all(c >= 0 for c in r) or all(c <= 0 for c in r)
        assert rs.roots[rs.neg(i)] == tuple(-c for c in r)
    # simple roots first, then positive roots by height
    assert [rs.roots[i] for i in rs.simple_indices] == [tuple(int(a == b) for b in range(l)) for a in range(l)]
    heights = [rs.height(i) for i in range(rs.n_positive)]
    assert heights == sorted(heights)


def test_two_root_lengths_in_c2():
    rs = build_root_system("C", 2)
    assert len({rs.inner(r, r) for r in rs.roots}) == 2


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 3)])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        build_root_system(*bad)


def test_highest_roots():
    assert build_root_system("E", 8).highest_root() == (2, 3, 4, 6, 5, 4, 3, 2)
    assert build_root_system("G", 2).highest_root() == (3, 2)
    assert build_root_system("F", 4).highest_root() == (2, 3, 4, 2)


def test_weyl_group_orders():
    assert len(build_root_system("A", 3).weyl_group()) == 24
    assert len(build_root_system("B", 3).weyl_group()) == 48
    assert len(build_root_system("G", 2).weyl_group()) == 12
    assert len(build_root_system("F", 4).weyl_group()) == 1152


def test_product_and_parse():
    rs = parse_type("A1xG2")
    assert rs == product(build_root_system("A", 1), build_root_system("G", 2))
    assert len(rs.roots) == 14 and rs.rank == 3
    assert rs.type_label == "A1+G2"


# -- prime classification ------------------------------------------------------


def test_prime_examples():
    v = classify_prime(build_root_system("E", 8), 5)
    assert v.bad and v.torsion
    v = classify_prime(build_root_system("A", 3), 2)
    assert v.good and not v.very_good
    v = classify_prime(build_root_system("C", 2), 3)
    assert v.good and not v.torsion
    v = classify_prime(build_root_system("B", 3), 2)
    assert v.bad and v.torsion


def test_fundamental_group_makes_torsion():
    rs = build_root_system("A", 3)
    assert not classify_prime(rs, 2).torsion
    assert classify_prime(rs, 2, fundamental_group_order=4).torsion
    assert not classify_prime(rs, 3, fundamental_group_order=4).torsion


def test_prime_input_validation():
    with pytest.raises(ValueError):
        classify_prime(build_root_system("A", 2), 4)
    with pytest.raises(ValueError):
        classify_prime(build_root_system("A", 2), 3, fundamental_group_order=0)


@pytest.mark.parametrize("label", ["A1+A1", "A2+G2", "B3+C3", "E6+A4"])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_verdict_combines_components(label, p):
    rs = parse_type(label)
    v = classify_prime(rs, p)
    parts = [classify_prime(parse_type(c.label), p) for c in rs.components]
    assert v.good == all(x.good for x in parts)
    assert v.very_good == all(x.very_good for x in parts)
    assert v.torsion == any(x.torsion for x in parts)
    assert v.good != v.bad
    assert not v.very_good or v.good
    # isomorphic systems built in another order get the same verdict
    swapped = parse_type("+".join(reversed(label.split("+"))))
    assert classify_prime(swapped, p).to_json()["good"] == v.good


# -- centralizer subsystems and rational closure -------------------------------


def test_zero_torus_element_kills_everything():
    rs = build_root_system("B", 3)
    for mode in ("additive", "multiplicative"):
        s = TorusElement(mode, (0, 0, 0))
        assert centralizer_subsystem(rs, s).members == tuple(range(len(rs.roots)))


def test_generic_torus_element_is_regular():
    rs = build_root_system("B", 3)
    s = TorusElement.multiplicative((Fraction(1, 101), Fraction(1, 103), Fraction(1, 107)))
    assert len(centralizer_subsystem(rs, s)) == 0


def test_sp4_involution_subsystem():
    rs = build_root_system("C", 2)
    s = TorusElement.multiplicative((0, Fraction(1, 2)), p=7, basis="epsilon")
    phi = centralizer_subsystem(rs, s)
    assert sorted(tuple(int(x) for x in rs.eps_vector(i)) for i in phi.members) == [(-2, 0), (0, -2), (0, 2), (2, 0)]
    assert phi.type_label() == "A1+A1"
    assert not is_rationally_closed(phi)
    assert rational_closure(phi).members == tuple(range(8))


def test_denominator_divisible_by_p_rejected():
    with pytest.raises(ValueError):
        TorusElement.multiplicative((Fraction(1, 2), 0), p=2)


def test_additive_mode_reduces_mod_p():
    rs = build_root_system("A", 2)
    s = TorusElement.additive((5, 1), p=5)
    assert sorted(rs.roots[i] for i in centralizer_subsystem(rs, s).members) == [(-1, 0), (1, 0)]


def test_closure_of_whole_and_empty():
    rs = build_root_system("G", 2)
    assert is_rationally_closed(Subsystem.whole(rs))
    assert is_rationally_closed(Subsystem.empty(rs))


def test_single_root_closure_in_a2():
    rs = build_root_system("A", 2)
    ss = Subsystem(rs, (0, rs.neg(0)))
    # brute force: roots in the Q-span of (1, 0) are exactly (+-1, 0)
    span = tuple(i for i, r in enumerate(rs.roots) if r[1] == 0)
    assert rational_closure(ss).members == span == ss.members


def test_negation_closure_enforced():
    with pytest.raises(ValueError):
        Subsystem(build_root_system("A", 2), (0,))


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_levi_subsystems_are_rationally_closed(label):
    rs = parse_type(label)
    for k in range(rs.rank + 1):
        for simple in combinations(rs.simple_indices, k):
            ss = levi_subsystem(rs, simple)
            assert is_rationally_closed(ss)
            assert rational_closure(ss).members == ss.members


@pytest.mark.parametrize("label", ["A2", "B2", "C2", "G2", "A3", "B3", "C3", "A1+A1"])
def test_slodowy_criterion_matches_weyl_search(label):
    rs = parse_type(label)
    for ss in oracles.closed_symmetric_subsystems(rs):
        assert is_rationally_closed(ss) == oracles.weyl_base_search(ss)


@pytest.mark.parametrize("label", ["A2", "C2", "G2", "B3"])
@pytest.mark.parametrize("p", [0, 2, 3])
def test_pseudo_levis_match_torus_grid(label, p):
    rs = parse_type(label)
    lib = {pl.subsystem.members for pl in pseudo_levis(rs, p, all_conjugates=True)}
    assert lib == oracles.realizable_by_grid(rs, 7, p)


def test_pseudo_levi_types():
    assert {pl.type_label for pl in pseudo_levis(parse_type("A2"))} == {"A2", "A1", "∅"}
    c2 = {pl.type_label: pl for pl in pseudo_levis(parse_type("C2"))}
    assert not c2["A1+A1"].rationally_closed
    assert "A1+A1" not in {pl.type_label for pl in pseudo_levis(parse_type("C2"), p=2)}
    g2 = {pl.type_label: pl for pl in pseudo_levis(parse_type("G2"))}
    assert not g2["A2"].rationally_closed and not g2["A1+~A1"].rationally_closed


@pytest.mark.parametrize("label", ["C2", "G2", "B3", "A1+C2"])
def test_pseudo_levi_witnesses(label):
    rs = parse_type(label)
    for pl in pseudo_levis(rs):
        assert centralizer_subsystem(rs, pl.witness).members == pl.subsystem.members
        assert pl.subsystem.is_closed()


def test_pseudo_levi_rank_cap():
    with pytest.raises(ValueError):
        pseudo_levis(parse_type("A4+A5"))


angles = st.fractions(min_value=0, max_value=1, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(label=st.sampled_from(SMALL_TYPES), data=st.data())
def test_centralizer_is_closed_subsystem(label, data):
    rs = parse_type(label)
    theta = data.draw(st.lists(angles, min_size=rs.rank, max_size=rs.rank))
    ss = centralizer_subsystem(rs, TorusElement.multiplicative(theta))
    assert ss.is_closed()
    assert all(rs.neg(i) in ss for i in ss.members)


@settings(max_examples=60, deadline=None)
@given(label=st.sampled_from(SMALL_TYPES), data=st.data())
def test_rational_closure_is_extensive_idempotent(label, data):
    rs = parse_type(label)
    theta = data.draw(st.lists(angles, min_size=rs.rank, max_size=rs.rank))
    ss = centralizer_subsystem(rs, TorusElement.multiplicative(theta))
    cl = rational_closure(ss)
    assert set(ss.members) <= set(cl.members)
    assert is_rationally_closed(cl)
    assert rational_closure(cl).members == cl.members


def test_json_round_trip_fields():
    rs = build_root_system("B", 2)
    d = rs.to_json()
    assert d["type"] == "B2" and len(d["roots"]) == 8
    v = classify_prime(rs, 2).to_json()
    assert v["bad"] and not v["good"]
