import itertools

import pytest
from hypothesis import given, settings, strategies as st

from planarbook.errors import InvalidArgument
from planarbook.mcg import (ConstructionParams, OpenBook, TwistWord, apply, boundary_product,
                            build_construction, build_family, cap_off, cap_off_many,
                            check_filling_system, construction_gammas, family_arcs,
                            family_curves, mcg_equal, strip_boundary_twists, twist)
from planarbook.surface import (ArcWord, boundary_curve, curve_from_partition,
                                geometric_intersection, is_embedded, make_surface)

from oracles import min_intersection


def seed_book(e=-1):
    S = make_surface(2)
    return OpenBook(S, twist(S, boundary_curve(S, 2), e))


def test_zero_exponents_dropped():
    S = make_surface(4)
    a = boundary_curve(S, 1)
    assert TwistWord(((a, 0), (a, 2))).factors == ((a, 2),)
    with pytest.raises(InvalidArgument):
        TwistWord(((a, 1.5),))


def test_identity_and_own_core():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    assert apply(S, TwistWord(), beta) == beta
    assert apply(S, twist(S, alpha, 3), alpha) == alpha


def test_single_twist_squares_intersection():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    img = apply(S, twist(S, beta, 1), alpha)
    assert is_embedded(S, img)
    assert geometric_intersection(S, img, alpha) == 4
    assert min_intersection(S, img, alpha) == 4
    assert geometric_intersection(S, apply(S, twist(S, beta, -2), alpha), alpha) == 8


def test_composition_reads_right_to_left():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    phi = twist(S, alpha, 1) * twist(S, beta, 1)
    x = ArcWord(1, 3, ())
    assert apply(S, phi, x) == apply(S, twist(S, alpha, 1), apply(S, twist(S, beta, 1), x))


def test_lantern_relation():
    S = make_surface(4)
    a = curve_from_partition(S, {1, 2})
    b = curve_from_partition(S, {2, 3})
    c = curve_from_partition(S, {1, 3})
    rhs = boundary_product(S, {1: 1, 2: 1, 3: 1, 4: 1})
    assert mcg_equal(S, twist(S, a, 1) * twist(S, c, 1) * twist(S, b, 1), rhs)
    assert not mcg_equal(S, twist(S, a, 1) * twist(S, b, 1) * twist(S, c, 1), rhs)


def test_equality_basics():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    phi = twist(S, alpha, 2) * twist(S, beta, -1)
    assert mcg_equal(S, phi, phi)
    assert mcg_equal(S, twist(S, alpha, 1) * twist(S, alpha, -1), TwistWord())
    assert not mcg_equal(S, twist(S, alpha, 1) * twist(S, beta, 1),
                         twist(S, beta, 1) * twist(S, alpha, 1))
    with pytest.raises(InvalidArgument):
        mcg_equal(S, phi, phi, make_surface(3))


def test_annulus_boundary_twists_agree():
    S = make_surface(2)
    assert mcg_equal(S, twist(S, boundary_curve(S, 1), 1), twist(S, boundary_curve(S, 2), 1))


def test_reference_arcs_fill():
    for b in range(1, 7):
        assert check_filling_system(make_surface(b))


def test_cap_off_examples():
    S = make_surface(2)
    disc = cap_off(OpenBook(S), 2)
    assert disc.surface.boundary_count == 1
    assert disc.monodromy == TwistWord()
    with pytest.raises(InvalidArgument):
        cap_off(disc, 1)


def test_cap_off_turns_alpha_peripheral():
    ob = build_family((1, 6, 6, 6, 6))
    capped = cap_off(ob, 2)
    S = capped.surface
    alpha = capped.monodromy.factors[0][0]
    assert alpha == boundary_curve(S, 1)
    assert capped.monodromy.factors[0][1] == -7


def test_cap_off_outer_boundary():
    S = make_surface(4)
    ob = OpenBook(S, twist(S, curve_from_partition(S, {1, 2}), 1))
    capped = cap_off(ob, 1)
    # {B_2} is all that is left on the far side of the curve
    assert capped.monodromy.factors[0][0] == boundary_curve(capped.surface, 1)


@pytest.mark.parametrize('B', [1, 2])
@pytest.mark.parametrize('ns', [(2, 2), (3, 5), (2, 4, 3)])
def test_construction_caps_back_to_seed(B, ns):
    seed = seed_book()
    ob = build_construction(seed, ConstructionParams(B, ns))
    assert ob.surface.boundary_count == 1 + len(ns)
    for order in itertools.permutations(ob.meta['cap_targets']):
        capped, _ = cap_off_many(ob, list(order))
        assert mcg_equal(seed.surface, capped.monodromy, seed.monodromy)


def test_construction_twice_and_metadata():
    ob = build_construction(seed_book(), ConstructionParams(1, (2, 2)))
    ob = build_construction(ob, ConstructionParams(3, (2, 2)))
    assert ob.surface.boundary_count == 4
    assert ob.meta['cap_targets'] == (2, 4)
    capped, _ = cap_off_many(ob, [4, 2])
    assert mcg_equal(capped.surface, capped.monodromy, seed_book().monodromy)
    assert len(construction_gammas(ob)) == 2


def test_construction_rejects_bad_params():
    with pytest.raises(InvalidArgument):
        build_construction(seed_book(), ConstructionParams(1, (2,)))
    with pytest.raises(InvalidArgument):
        build_construction(seed_book(), ConstructionParams(5, (2, 2)))


def test_family_exponents():
    ob = build_family((1, 6, 6, 6, 6))
    exps = [e for _, e in ob.monodromy.factors]
    assert exps == [-7, 1, 6, 6, 6, 6]
    short = build_family((1, 0, 0, 0, 0))
    assert [e for _, e in short.monodromy.factors] == [-1, 1]


def test_family_arcs_position():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    g1, g2 = family_arcs(S)
    assert (g1.start, g1.end, g2.start, g2.end) == (1, 2, 4, 3)
    for g in (g1, g2):
        assert geometric_intersection(S, g, beta) == 1
        assert geometric_intersection(S, g, alpha) == 2


def test_strip_boundary_twists():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    word = twist(S, boundary_curve(S, 1), 3) * twist(S, alpha, 1)
    stripped, exps = strip_boundary_twists(S, word)
    assert stripped == twist(S, alpha, 1) and exps == {1: 3}
    stripped, exps = strip_boundary_twists(S, boundary_product(S, {2: 1, 3: -2}))
    assert stripped == TwistWord() and exps == {2: 1, 3: -2}
    plain = twist(S, alpha, -7) * twist(S, beta, 1)
    assert strip_boundary_twists(S, plain) == (plain, {})


# -- randomized group-action properties ---------------------------------------------------

@st.composite
def partition_curves(draw, S):
    k = draw(st.integers(1, S.boundary_count - 1))
    inside = draw(st.lists(st.sampled_from(S.labels), min_size=k, max_size=k, unique=True))
    return curve_from_partition(S, inside)


@st.composite
def twist_words(draw, S, max_len=4):
    n = draw(st.integers(0, max_len))
    facs = []
    for _ in range(n):
        facs.append((draw(partition_curves(S)), draw(st.sampled_from([-2, -1, 1, 2]))))
    return TwistWord(tuple(facs))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_action_properties(data):
    S = make_surface(data.draw(st.integers(3, 5)))
    phi = data.draw(twist_words(S))
    psi = data.draw(twist_words(S, 2))
    a = data.draw(partition_curves(S))
    b = data.draw(partition_curves(S))
    assert apply(S, phi * psi, a) == apply(S, phi, apply(S, psi, a))
    assert apply(S, phi * phi.inverse(), a) == a
    assert geometric_intersection(S, apply(S, phi, a), apply(S, phi, b)) == \
        geometric_intersection(S, a, b)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_conjugation_rule(data):
    # tau_c^e tau_d = tau_{tau_c^e(d)} tau_c^e
    S = make_surface(data.draw(st.integers(3, 5)))
    c = data.draw(partition_curves(S))
    d = data.draw(partition_curves(S))
    e = data.draw(st.sampled_from([-2, -1, 1, 2]))
    cd = apply(S, twist(S, c, e), d)
    assert mcg_equal(S, twist(S, c, e) * twist(S, d, 1), twist(S, cd, 1) * twist(S, c, e))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_equality_is_a_congruence(data):
    S = make_surface(data.draw(st.integers(3, 5)))
    phi = data.draw(twist_words(S, 3))
    psi = data.draw(twist_words(S, 3))
    chi = data.draw(twist_words(S, 2))
    if mcg_equal(S, phi, psi):
        assert mcg_equal(S, chi * phi, chi * psi)
        assert mcg_equal(S, phi * chi, psi * chi)
    assert mcg_equal(S, phi * psi * psi.inverse(), phi)
