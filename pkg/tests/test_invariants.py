import itertools

import pytest
from hypothesis import given, settings, strategies as st

from planarbook.errors import InvalidArgument
from planarbook.invariants import (arc_system_fills, complementary_regions, departure,
                                   fdtc_lower_bound, fdtc_via_reduction, fills,
                                   find_left_veering_arc, kr_count, penner_certificate,
                                   periodic_fdtc)
from planarbook.mcg import (ConstructionParams, OpenBook, apply, build_construction,
                            build_family, construction_gammas, family_curves, named_arcs,
                            twist)
from planarbook.surface import (ArcWord, boundary_curve, curve_from_partition,
                                geometric_intersection, make_surface)


def boundary_book(b, B, k):
    S = make_surface(b)
    return OpenBook(S, twist(S, boundary_curve(S, B), k))


# -- veering ------------------------------------------------------------------------------

@pytest.mark.parametrize('b', [2, 3, 4])
def test_positive_boundary_twist_turns_right(b):
    for B in range(1, b + 1):
        ob = boundary_book(b, B, 1)
        S = ob.surface
        a = ArcWord(B, 2 if B == 1 else 1, ())
        assert departure(S, a, apply(S, ob.monodromy, a)) == 1
        assert find_left_veering_arc(ob, B, 3) is None


def test_negative_twist_is_caught():
    ob = boundary_book(2, 1, -1)
    arc = find_left_veering_arc(ob, 1, 2)
    assert arc is not None
    S = ob.surface
    assert departure(S, arc, apply(S, ob.monodromy, arc)) == -1


def test_identity_has_no_violation():
    S = make_surface(4)
    ob = OpenBook(S)
    for B in S.labels:
        assert find_left_veering_arc(ob, B, 3) is None


def test_family_has_no_violation_at_b1():
    assert find_left_veering_arc(build_family((1, 6, 6, 6, 6)), 1, 4) is None


def test_unknown_boundary():
    with pytest.raises(InvalidArgument):
        find_left_veering_arc(boundary_book(3, 1, 1), 7, 2)


# -- arc counts ---------------------------------------------------------------------------

@pytest.mark.parametrize('k', [1, 2, 3, 5])
def test_boundary_twist_count_is_one_less_than_power(k):
    # the last turn ends on the far endpoint instead of crossing the arc
    for b in (2, 3, 4):
        ob = boundary_book(b, 1, k)
        assert kr_count(ob, 1, ArcWord(1, 2, ())) == k - 1
        assert periodic_fdtc(ob, 1).value == k


def test_identity_count_is_zero():
    S = make_surface(4)
    ob = OpenBook(S)
    for a in (ArcWord(1, 3, ()), ArcWord(2, 4, (3,))):
        assert kr_count(ob, a.start, a) == 0


def test_count_needs_arc_on_boundary():
    with pytest.raises(InvalidArgument):
        kr_count(boundary_book(4, 1, 2), 3, ArcWord(1, 2, ()))


@pytest.mark.parametrize('v', [(1, 6, 6, 6, 6), (2, 7, 6, 8, 6), (1, 9, 7, 6, 8)])
def test_family_counts(v):
    ob = build_family(v)
    arcs = named_arcs(ob)
    _, n1, n2, n3, n4 = v
    assert kr_count(ob, 1, arcs['gamma1']) == n1 - 1
    assert kr_count(ob, 2, arcs['gamma1']) == n2 - 1
    assert kr_count(ob, 3, arcs['gamma2']) == n3 - 1
    assert kr_count(ob, 4, arcs['gamma2']) == n4 - 1
    # the radial arc at B_1 misses alpha and sees one more crossing
    assert kr_count(ob, 1, ArcWord(1, 2, ())) == n1


def test_lower_bound_examples():
    ob = build_family((1, 6, 6, 6, 6))
    bound = fdtc_lower_bound(ob, 3, [named_arcs(ob)['gamma2']])
    assert bound.kind == 'lower_bound' and bound.value == 5
    S = make_surface(3)
    assert fdtc_lower_bound(OpenBook(S), 2).value == 0
    with pytest.raises(InvalidArgument):
        fdtc_lower_bound(ob, 1, [])


# -- exact coefficients -------------------------------------------------------------------

def test_periodic_route():
    ob = boundary_book(2, 2, 1)
    assert periodic_fdtc(ob, 1).value == 1
    assert periodic_fdtc(ob, 2).value == 1
    S = make_surface(4)
    alpha, _ = family_curves(S)
    assert periodic_fdtc(OpenBook(S, twist(S, alpha, 1)), 1) is None


@pytest.mark.parametrize('B', [1, 2])
@pytest.mark.parametrize('ns', [(2, 3), (5, 2, 4)])
def test_construction_coefficients(B, ns):
    S = make_surface(2)
    seed = OpenBook(S, twist(S, boundary_curve(S, 2), -1))
    ob = build_construction(seed, ConstructionParams(B, ns))
    gamma = construction_gammas(ob)[-1]
    for label, n in zip(ob.meta['new_boundaries'], ns):
        bound = fdtc_via_reduction(ob, label, gamma)
        assert bound.kind == 'exact' and bound.value == n
        assert fdtc_lower_bound(ob, label).value <= n


def test_reduction_on_interior_curve():
    S = make_surface(5)
    gamma = curve_from_partition(S, {2, 3})
    phi = (twist(S, gamma, -2) * twist(S, boundary_curve(S, 2), 3) *
           twist(S, boundary_curve(S, 3), 4) * twist(S, curve_from_partition(S, {4, 5}), 1))
    ob = OpenBook(S, phi)
    assert fdtc_via_reduction(ob, 2, gamma).value == 3
    assert fdtc_via_reduction(ob, 3, gamma).value == 4
    # on the far side the twist about {4,5} is not a boundary twist
    assert fdtc_via_reduction(ob, 4, gamma) is None


def test_reduction_needs_invariant_curve():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    ob = OpenBook(S, twist(S, beta, 1))
    assert fdtc_via_reduction(ob, 1, alpha) is None


# -- filling -----------------------------------------------------------------------------

def test_fills_examples():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    assert fills(S, [alpha, beta])
    assert not fills(S, [alpha])
    assert not fills(S, [])


def test_two_crossing_curves_fill_four_holed_sphere():
    S = make_surface(4)
    curves = [curve_from_partition(S, s) for s in ({1, 2}, {2, 3}, {1, 3})]
    for a, b in itertools.combinations(curves, 2):
        assert fills(S, [a, b]) == (geometric_intersection(S, a, b) > 0)


def test_disjoint_curves_never_fill():
    S = make_surface(5)
    a = curve_from_partition(S, {2, 3})
    b = curve_from_partition(S, {4, 5})
    assert not fills(S, [a, b])


def test_region_bookkeeping():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    regions, crossings = complementary_regions(S, [alpha, beta])
    assert crossings == 2
    assert sorted(len(r.boundaries) for r in regions) == [1, 1, 1, 1]
    assert sum(r.euler for r in regions) - crossings == S.euler_characteristic


@pytest.mark.parametrize('b', [1, 2, 3, 5])
def test_reference_arc_system(b):
    S = make_surface(b)
    arcs = [ArcWord(1, j, ()) for j in S.generators]
    assert arc_system_fills(S, arcs)
    if b > 2:
        assert not arc_system_fills(S, arcs[:-1])


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_filling_invariant_under_twists(data):
    S = make_surface(data.draw(st.integers(4, 5)))
    subsets = [s for k in range(2, S.boundary_count - 1)
               for s in itertools.combinations(S.labels, k)]
    picks = data.draw(st.lists(st.sampled_from(subsets), min_size=1, max_size=3))
    curves = [curve_from_partition(S, s) for s in picks]
    f = fills(S, curves)
    c = curve_from_partition(S, data.draw(st.sampled_from(subsets)))
    phi = twist(S, c, data.draw(st.sampled_from([-1, 1, 2])))
    assert fills(S, [apply(S, phi, x) for x in curves]) == f
    if f:
        assert fills(S, curves + [c])


# -- pseudo-Anosov certificates ----------------------------------------------------------

def test_family_certificate():
    ob = build_family((1, 6, 6, 6, 6))
    S = ob.surface
    alpha, beta = family_curves(S)
    cert = penner_certificate(ob, [beta], [alpha])
    assert cert.verdict
    assert all(v for _, v in cert.checks)


def test_certificate_failures():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    cert = penner_certificate(OpenBook(S, twist(S, alpha, -1)), [], [alpha])
    assert not cert.verdict and not cert.check('fills')
    cert = penner_certificate(OpenBook(S, twist(S, alpha, 1) * twist(S, beta, 1)), [beta], [alpha])
    assert not cert.verdict and not cert.check('signs')
    cert = penner_certificate(build_family((0, 6, 6, 6, 6)), [beta], [alpha])
    assert not cert.verdict and not cert.check('every_curve_used')


def test_certificate_ignores_boundary_twists():
    S = make_surface(4)
    alpha, beta = family_curves(S)
    base = twist(S, alpha, -2) * twist(S, beta, 3)
    extra = base * twist(S, boundary_curve(S, 2), -5)
    for word in (base, extra):
        assert penner_certificate(OpenBook(S, word), [beta], [alpha]).verdict
