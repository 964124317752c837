"""
Right-veering tests, boundary-proximate arc counts, fractional Dehn twist
coefficients, filling checks and twist-filling pseudo-Anosov certificates.

Directions at a marked point follow :mod:`planarbook.arrangement`: an arc
leaving p_B is to the right of another when it leaves counterclockwise
after it along the cut-open polygon.  A positive boundary twist sends
every arc at that boundary to the right.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .arrangement import Arrangement, boundary_loop, loop_is_peripheral
from .errors import InvalidArgument, InvalidCurve
from .mcg import (TwistWord, apply, boundary_product, cap_off_many, mcg_equal,
                  named_arcs, strip_boundary_twists)
from .surface import (ArcWord, MultiCurve, _valid, geometric_intersection,
                      is_boundary_parallel, is_embedded, partition, same_class)
from . import words as fw

# sign given to a boundary-proximate crossing where the image crosses the
# arc from its right to its left; fixed so that positive boundary twists
# give positive counts
KR_SIGN = -1


@dataclass(frozen=True)
class FdtcBound:
    boundary: int
    kind: str                 # 'exact' or 'lower_bound'
    value: Fraction
    provenance: str
    witness: object = None

    def exceeds(self, threshold):
        """True if the bound certifies c > threshold."""
        return self.value > threshold

    def at_least(self, threshold):
        return self.value >= threshold


@dataclass(frozen=True)
class PennerCertificate:
    gamma1: MultiCurve
    gamma2: MultiCurve
    checks: tuple = ()
    diagnostics: tuple = ()
    verdict: bool = False

    def check(self, name):
        return dict(self.checks).get(name)


# -- directions at a marked point ------------------------------------------------

def _orient_at(S, arc, B):
    """Orientations of ``arc`` that start at p_B."""
    out = []
    if arc.start == B:
        out.append(arc)
    if arc.end == B and (arc.start != B or arc.reversed() != arc):
        out.append(arc.reversed())
    return out


def departure(S, alpha, image):
    """+1 if ``image`` leaves alpha's start to the right, -1 if left, 0 if equal.

    Both arcs must start at the same marked point.
    """
    if alpha == image:
        return 0
    arr = Arrangement(S, [alpha, image])
    return arr.ray_order(0, 0, 1, 0)


def is_left_veering_at(ob, alpha, B):
    S = ob.surface
    for a in _orient_at(S, alpha, B):
        if departure(S, a, apply(S, ob.monodromy, a)) < 0:
            return True
    return False


def candidate_arcs(S, B, depth):
    """Reduced embedded essential arcs starting at p_B with at most
    ``depth`` chord crossings, shortest first."""
    S.check_label(B)
    letters = [s * j for j in S.generators for s in (1, -1)]
    seen = set()
    for n in range(depth + 1):
        for word in product(letters, repeat=n):
            if any(word[k] == -word[k + 1] for k in range(n - 1)):
                continue
            for end in S.labels:
                a = ArcWord(B, end, word)
                if a in seen or a.reversed() in seen:
                    continue
                if end == B and _cuts_off_boundary(S, B, word):
                    continue
                if not is_embedded(S, a):
                    continue
                seen.add(a)
                yield a


def _cuts_off_boundary(S, B, word):
    """True for the arcs from p_B to itself that run once around B (or not at all)."""
    loop = boundary_loop(S, B)
    return word in ((), loop, fw.invert(loop))


def find_left_veering_arc(ob, B, depth=4):
    S = ob.surface
    S.check_label(B)
    if not isinstance(depth, int) or depth < 0:
        raise InvalidArgument("depth must be a non-negative integer")
    if not ob.monodromy.factors:
        return None
    for a in candidate_arcs(S, B, depth):
        if departure(S, a, apply(S, ob.monodromy, a)) < 0:
            return a
    return None


# -- boundary-proximate arc counts ------------------------------------------------------------

def kr_count(ob, B, alpha):
    """Signed count of crossings of alpha and its image lying near B.

    A crossing counts when the loop made of the two initial segments from
    p_B is a power of the loop around B.  The arc is oriented to start on
    B; when both ends lie on B the start is used.
    """
    S = ob.surface
    S.check_label(B)
    alpha = _valid(S, alpha)
    if alpha.is_curve:
        raise InvalidArgument("kr_count needs an arc")
    if alpha.start != B:
        if alpha.end != B:
            raise InvalidArgument("arc does not end on B_%d" % B)
        alpha = alpha.reversed()
    image = apply(S, ob.monodromy, alpha)
    if image == alpha:
        return 0
    arr = Arrangement(S, [alpha, image])
    M = arr.n_points
    la, lb = alpha.letters, image.letters
    total = 0
    for s, t in arr.crossing_pairs(0, 1):
        loop = fw.free_reduce(la[:s] + fw.invert(lb[:t]))
        if not loop_is_peripheral(S, B, loop):
            continue
        a, b = arr.ends[0][s]
        _, q = arr.ends[1][t]
        # image heading into the right of alpha's strand crosses left to right
        q_right = 0 < (q - a) % M < (b - a) % M
        total += -KR_SIGN if q_right else KR_SIGN
    return total


def default_kr_arcs(ob, B):
    S = ob.surface
    arcs = [ArcWord(B, j, ()) for j in S.labels if j != B]
    for a in named_arcs(ob).values():
        if B in (a.start, a.end) and a not in arcs:
            arcs.append(a)
    return arcs


def fdtc_lower_bound(ob, B, arcs=None):
    S = ob.surface
    S.check_label(B)
    if arcs is None:
        arcs = default_kr_arcs(ob, B)
    arcs = list(arcs)
    if not arcs:
        raise InvalidArgument("no candidate arcs at B_%d" % B)
    best, best_arc = None, None
    for a in arcs:
        k = kr_count(ob, B, a)
        if best is None or k > best:
            best, best_arc = k, a
    return FdtcBound(B, 'lower_bound', Fraction(best), 'boundary arc count', best_arc)


# -- exact values ---------------------------------------------------------------------

def boundary_twist_exponents(S, phi):
    """Exponents k with phi equal to the product of tau_{B_i}^{k_i}, or None.

    The candidate exponents come from the boundary factors of the word and
    are confirmed by comparing mapping classes.  On the annulus both
    boundary twists are the same map, so each boundary gets the total.
    """
    b = S.boundary_count
    if b == 1:
        return {1: 0}
    _, exps = strip_boundary_twists(S, phi)
    if b == 2:
        total = sum(exps.values())
        exps = {1: total, 2: total}
        target = boundary_product(S, {2: total})
    else:
        target = boundary_product(S, exps)
    if not mcg_equal(S, phi, target):
        return None
    return {B: exps.get(B, 0) for B in S.labels}


def periodic_fdtc(ob, B):
    """Exact coefficient when the monodromy is a product of boundary twists."""
    S = ob.surface
    S.check_label(B)
    exps = boundary_twist_exponents(S, ob.monodromy)
    if exps is None:
        return None
    return FdtcBound(B, 'exact', Fraction(exps[B]), 'boundary-periodic normal form')


def fdtc_via_reduction(ob, B, gamma):
    """Exact coefficient at B from one reduction step along ``gamma``.

    Needs gamma fixed by the monodromy and every twist curve disjoint from
    gamma, so that the monodromy splits into commuting pieces on the two
    sides.  The piece on B's side is then tested for being a product of
    boundary twists on that component.  Returns None when any step fails.
    """
    S = ob.surface
    S.check_label(B)
    gamma = _valid(S, gamma)
    if not gamma.is_curve:
        raise InvalidCurve("reducing curve must be closed")
    if is_boundary_parallel(S, gamma) is not None:
        # cutting along a boundary-parallel curve changes nothing
        return periodic_fdtc(ob, B)
    phi = ob.monodromy
    if not same_class(apply(S, phi, gamma), gamma):
        return None
    for c, _ in phi.factors:
        if geometric_intersection(S, c, gamma) != 0:
            return None
    inside = partition(S, gamma)
    side = inside if B in inside else frozenset(S.labels) - inside
    far = sorted(frozenset(S.labels) - side)
    keep = far[-1]
    factors = []
    for c, e in phi.factors:
        if same_class(c, gamma) or _lies_within(S, c, side):
            factors.append((c, e))
    piece = type(ob)(S, TwistWord(tuple(factors)))
    # capping all but one far boundary leaves B's component, with gamma
    # parallel to the remaining far boundary
    capped, _ = cap_off_many(piece, [l for l in far if l != keep])
    new_B = B - sum(1 for l in far if l != keep and l < B)
    exps = boundary_twist_exponents(capped.surface, capped.monodromy)
    if exps is None:
        return None
    return FdtcBound(B, 'exact', Fraction(exps[new_B]), 'reducible restriction', gamma)


def _lies_within(S, c, side):
    inside = partition(S, c)
    other = frozenset(S.labels) - inside
    return (inside < side) or (other < side)


def exact_fdtc(ob, B, curves=()):
    """Try the periodic route and then each candidate reducing curve."""
    bound = periodic_fdtc(ob, B)
    if bound is not None:
        return bound
    for g in curves:
        try:
            bound = fdtc_via_reduction(ob, B, g)
        except InvalidCurve:
            continue
        if bound is not None:
            return bound
    return None


# -- complementary regions --------------------------------------------------------------

@dataclass(frozen=True)
class Region:
    euler: int
    boundaries: frozenset
    faces: int


def complementary_regions(S, items):
    """Regions of S cut along the given curves and arcs, in minimal position.

    The strands are drawn as straight chords between points on a circle
    (any realisation of the chord diagram gives the same regions), faces
    of the polygon are traced, and faces are then glued across the pieces
    of the cut chords.  Returns the list of regions and the number of
    crossings.
    """
    items = _distinct(S, items)
    arr = Arrangement(S, items)
    M = arr.n_points
    if M == 0:
        return [Region(S.euler_characteristic, frozenset(S.labels), 1)], 0
    slot_of, index_in_slot = _point_slots(arr)
    coords = _circle_points(M)
    strands = [tuple(int(x) for x in e) for ends in arr.ends for e in ends]
    crossings, along = _strand_crossings(strands, coords)

    # half-edges are (tail, head, key); vertices are ('p', k) or ('x', c)
    def pt(k):
        return ('p', k)

    rot = {}
    for k in range(M):
        nxt = (pt(k), pt((k + 1) % M), ('b', k))
        prv = (pt(k), pt((k - 1) % M), ('b', (k - 1) % M))
        rot[pt(k)] = [nxt, None, prv]
    out_at_x = {}
    for g, (a, b) in enumerate(strands):
        chain = [pt(a)] + [('x', c) for _, c in along[g]] + [pt(b)]
        for n, (u, v) in enumerate(zip(chain, chain[1:])):
            key = ('s', g, n)
            for tail, head in ((u, v), (v, u)):
                h = (tail, head, key)
                if tail[0] == 'p':
                    rot[tail][1] = h
                else:
                    out_at_x.setdefault(tail, []).append(h)
    xy = {('x', c): p for c, p in enumerate(crossings)}
    for v, hs in out_at_x.items():
        x0, y0 = xy[v]

        def angle(h, x0=x0, y0=y0):
            x1, y1 = xy[h[1]] if h[1][0] == 'x' else coords[h[1][1]]
            return np.arctan2(y1 - y0, x1 - x0)
        rot[v] = sorted(hs, key=angle)
    index = {h: (v, i) for v, hs in rot.items() for i, h in enumerate(hs)}

    faces = []
    seen = set()
    for start in index:
        if start in seen:
            continue
        face = []
        h = start
        while h not in seen:
            seen.add(h)
            face.append(h)
            tail, head, key = h
            v, i = index[(head, tail, key)]
            hs = rot[v]
            h = hs[(i - 1) % len(hs)]
        faces.append(face)

    # the outer face runs clockwise along the circle
    interior = []
    for face in faces:
        if all(key[0] == 'b' and head[1] == (tail[1] - 1) % M for tail, head, key in face):
            continue
        interior.append(face)

    atom_face = {}
    for f, face in enumerate(interior):
        for tail, head, key in face:
            if key[0] != 'b' or head[1] != (tail[1] + 1) % M:
                continue
            for atom in _atoms(S, arr, slot_of, index_in_slot, tail[1], M):
                atom_face[atom] = f
    parent = list(range(len(interior)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    glued = []
    for j in S.generators:
        n = len(arr.slot_points.get(S.slot_a(j), ()))
        for r in range(n + 1):
            fa = atom_face[(S.slot_a(j), r)]
            fb = atom_face[(S.slot_b(j), n - r)]
            parent[find(fa)] = find(fb)
            glued.append(fa)
    nfaces, nglued, bounds = {}, {}, {}
    for f in range(len(interior)):
        root = find(f)
        nfaces[root] = nfaces.get(root, 0) + 1
        bounds.setdefault(root, set())
    for f in glued:
        root = find(f)
        nglued[root] = nglued.get(root, 0) + 1
    for (slot, _), f in atom_face.items():
        lab = S.slot_boundary(slot)
        if lab is not None:
            bounds[find(f)].add(lab)
    regions = [Region(nfaces[r] - nglued.get(r, 0), frozenset(bounds[r]), nfaces[r])
               for r in sorted(nfaces)]
    return regions, len(crossings)


def _distinct(S, items):
    out = []
    for w in items:
        w = _valid(S, w)
        if not any(same_class(w, u) for u in out):
            out.append(w)
    return out


def _point_slots(arr):
    slot_of, index_in_slot = {}, {}
    for slot, pts in arr.slot_points.items():
        for r, p in enumerate(pts):
            k = arr.pos[p]
            slot_of[k] = slot
            index_in_slot[k] = r
    return slot_of, index_in_slot


def _circle_points(M):
    # slightly irregular spacing keeps three chords from meeting in a point
    k = np.arange(M)
    jitter = 0.35 * ((k * 0.6180339887) % 1.0)
    theta = 2 * np.pi * (k + jitter) / M
    return np.stack([np.cos(theta), np.sin(theta)], axis=1)


def _strand_crossings(strands, coords):
    crossings = []
    along = [[] for _ in strands]
    for g in range(len(strands)):
        a, b = strands[g]
        lo, hi = min(a, b), max(a, b)
        P, R = coords[a], coords[b] - coords[a]
        for h in range(g + 1, len(strands)):
            c, d = strands[h]
            if (lo < c < hi) == (lo < d < hi):
                continue
            Q, T = coords[c], coords[d] - coords[c]
            den = R[0] * T[1] - R[1] * T[0]
            diff = Q - P
            t = (diff[0] * T[1] - diff[1] * T[0]) / den
            u = (diff[0] * R[1] - diff[1] * R[0]) / den
            cid = len(crossings)
            crossings.append(tuple(P + t * R))
            along[g].append((t, cid))
            along[h].append((u, cid))
    for lst in along:
        lst.sort()
    return crossings, along


def _atoms(S, arr, slot_of, index_in_slot, k, M):
    """Pieces of polygon sides covered by the boundary edge from point k to k+1."""
    s, r = slot_of[k], index_in_slot[k]
    s2, r2 = slot_of[(k + 1) % M], index_in_slot[(k + 1) % M]
    out = [(s, r + 1)]
    if s2 == s and r2 == r + 1:
        return out
    t = (s + 1) % S.n_slots
    while t != s2:
        out.append((t, 0))
        t = (t + 1) % S.n_slots
    out.append((s2, r2))
    return out


def fills(S, curves):
    """True if every complementary region is a disc or an annulus around
    a single boundary component."""
    curves = list(curves)
    if not curves:
        return False
    for c in curves:
        if not c.is_curve:
            raise InvalidCurve("fills takes closed curves")
    regions, n_cross = complementary_regions(S, curves)
    total = sum(r.euler for r in regions)
    if total - n_cross != S.euler_characteristic:
        raise AssertionError("Euler characteristic bookkeeping failed")
    return all((r.euler == 1 and not r.boundaries) or
               (r.euler == 0 and len(r.boundaries) == 1) for r in regions)


def arc_system_fills(S, arcs):
    """True if the arcs cut S into discs."""
    arcs = list(arcs)
    if not arcs:
        return S.boundary_count == 1
    regions, _ = complementary_regions(S, arcs)
    return all(r.euler == 1 for r in regions)


# -- pseudo-Anosov certificates from filling twist curves ------------------------------------------------------------------

def _as_multicurve(S, m):
    if isinstance(m, MultiCurve):
        return m
    from .surface import make_multicurve
    return make_multicurve(S, m)


def penner_certificate(ob, gamma1, gamma2):
    """Check that the monodromy, boundary twists aside, is a product of
    positive twists on gamma1 curves and negative twists on gamma2 curves
    that together fill the surface, each curve used at least once."""
    S = ob.surface
    gamma1 = _as_multicurve(S, gamma1)
    gamma2 = _as_multicurve(S, gamma2)
    stripped, _ = strip_boundary_twists(S, ob.monodromy)
    notes = []
    g1, g2 = list(gamma1), list(gamma2)
    disjoint = all(geometric_intersection(S, c, d) == 0
                   for grp in (g1, g2) for i, c in enumerate(grp) for d in grp[i + 1:])
    if not disjoint:
        notes.append("a multicurve has intersecting components")
    used = set()
    signs_ok = True
    for c, e in stripped.factors:
        where = [k for k, d in enumerate(g1) if same_class(c, d)]
        if where and e > 0:
            used.add((1, where[0]))
            continue
        where = [k for k, d in enumerate(g2) if same_class(c, d)]
        if where and e < 0:
            used.add((2, where[0]))
            continue
        signs_ok = False
        notes.append("factor %r^%d does not match the sign pattern" % (c.letters, e))
    every = len(used) == len(g1) + len(g2)
    if not every:
        notes.append("some multicurve component never appears")
    peripheral = [c for c in g1 + g2 if is_boundary_parallel(S, c) is not None]
    if peripheral:
        notes.append("boundary-parallel curves cannot take part")
    fill = bool(g1 + g2) and not peripheral and fills(S, g1 + g2)
    if not fill:
        notes.append("the curves do not fill")
    checks = (('boundary_twists_stripped', True), ('disjoint', disjoint),
              ('every_curve_used', every), ('fills', fill), ('signs', signs_ok))
    verdict = all(v for _, v in checks)
    return PennerCertificate(gamma1, gamma2, checks, tuple(notes), verdict)
