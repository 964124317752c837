"""Brute-force reference computations used to freeze expected values.

These deliberately avoid the ray-ranking machinery: they enumerate every
ordering of crossing points along every chord and take the best one.
"""
import itertools


def _strands(S, w):
    L = w.letters
    if w.is_curve:
        n = len(L)
        return [((k - 1) % n, k) for k in range(n)], True
    n = len(L)
    return [(k - 1 if k > 0 else None, k if k < n else None) for k in range(n + 1)], False


def _points(S, words):
    """Crossing points per chord: list of (word index, letter index)."""
    chords = {}
    for wi, w in enumerate(words):
        for k, l in enumerate(w.letters):
            chords.setdefault(abs(l), []).append((wi, k))
    return chords


def _positions(S, words, orders):
    pos = {}
    counter = 0
    slot_pts = {}
    for j, pts in orders.items():
        slot_pts[S.slot_a(j)] = [(p, 'a') for p in pts]
        slot_pts[S.slot_b(j)] = [(p, 'b') for p in reversed(pts)]
    for wi, w in enumerate(words):
        if not w.is_curve:
            slot_pts.setdefault(S.marked_slot(w.start), []).append(((wi, 'start'), 'p'))
            slot_pts.setdefault(S.marked_slot(w.end), []).append(((wi, 'end'), 'p'))
    for s in range(S.n_slots):
        for pt in slot_pts.get(s, ()):
            pos[pt] = counter
            counter += 1
    return pos


def _chords(S, words, pos):
    out = []
    for wi, w in enumerate(words):
        L = w.letters
        strands, cyc = _strands(S, w)
        lst = []
        for (k0, k1) in strands:
            if k0 is None:
                e = pos[((wi, 'start'), 'p')]
            else:
                e = pos[((wi, k0), 'b' if L[k0] > 0 else 'a')]
            if k1 is None:
                f = pos[((wi, 'end'), 'p')]
            else:
                f = pos[((wi, k1), 'a' if L[k1] > 0 else 'b')]
            lst.append(tuple(sorted((e, f))))
        out.append(lst)
    return out


def _cross(c, d):
    (a, b), (x, y) = c, d
    return (a < x < b) != (a < y < b)


def _endpoint_orders(words):
    # arcs sharing a marked point may leave it in any order
    groups = {}
    for wi, w in enumerate(words):
        if not w.is_curve:
            groups.setdefault(w.start, []).append((wi, 'start'))
            groups.setdefault(w.end, []).append((wi, 'end'))
    return groups


def _all_arrangements(S, words):
    chords = _points(S, words)
    keys = sorted(chords)
    groups = _endpoint_orders(words)
    gkeys = sorted(groups)
    for perms in itertools.product(*[itertools.permutations(chords[j]) for j in keys]):
        orders = dict(zip(keys, perms))
        for gperms in itertools.product(*[itertools.permutations(groups[g]) for g in gkeys]):
            pos = _positions(S, words, orders)
            # re-rank marked points in the chosen order
            for g, gp in zip(gkeys, gperms):
                slots = sorted(pos[(x, 'p')] for x in gp)
                for x, p in zip(gp, slots):
                    pos[(x, 'p')] = p
            yield _chords(S, words, pos)


def min_self_crossings(S, w):
    best = None
    for (cs,) in _all_arrangements(S, [w]):
        n = sum(_cross(c, d) for c, d in itertools.combinations(cs, 2))
        best = n if best is None else min(best, n)
        if best == 0:
            break
    return best


def min_intersection(S, a, b):
    """Minimum crossings of a with b over arrangements where both are embedded."""
    best = None
    for ca, cb in _all_arrangements(S, [a, b]):
        if any(_cross(c, d) for c, d in itertools.combinations(ca, 2)):
            continue
        if any(_cross(c, d) for c, d in itertools.combinations(cb, 2)):
            continue
        n = sum(_cross(c, d) for c in ca for d in cb)
        best = n if best is None else min(best, n)
    return best
