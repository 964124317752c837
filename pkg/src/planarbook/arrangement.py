"""
Minimal-position arrangements of reduced words in the cut-open polygon.

Every strand of every word is a chord of the polygon between two
boundary points.  Points sharing a polygon side are ordered by comparing
the rays that leave them into the polygon: two rays entering through the
same side are followed step by step until they leave through different
sides, and the one whose exit comes first counterclockwise sits later on
the entry side.  Parallel runs preserve this order (a pass through the
polygon and the chord gluing each reverse it), so a ray's key is just
its sequence of exits measured against its entries.

A crossing point on a chord has a ray on each side.  Two such points are
ordered by whichever side's rays part company first.  When the two
sides disagree the strands are linked and must cross once; deciding by
the nearer divergence puts that crossing in the middle of the shared
run, and the rule is a lexicographic order on interleaved rays, hence
transitive.  Deciding by a fixed side instead would add a bigon whenever
a run passes chords in alternating directions.

Ray keys are ranked for all rays at once by pointer doubling; common
prefix lengths come from the stored doubling levels.
"""
from functools import cmp_to_key

import numpy as np

from . import words as fw


class Arrangement:

    def __init__(self, S, items):
        self.S = S
        self.items = list(items)
        self.N = S.n_slots
        self._build_strands()
        self._rank_rays()
        self._place_points()

    # -- strands ---------------------------------------------------------------

    def _build_strands(self):
        S = self.S
        self.strands = []      # per item: list of (entry_slot, exit_slot)
        for w in self.items:
            L = w.letters
            if w.is_curve:
                n = len(L)
                st = [(S.enter_slot(L[k - 1]), S.exit_slot(L[k])) for k in range(n)]
            else:
                n = len(L)
                if n == 0:
                    st = [(S.marked_slot(w.start), S.marked_slot(w.end))]
                else:
                    st = [(S.marked_slot(w.start), S.exit_slot(L[0]))]
                    st += [(S.enter_slot(L[k - 1]), S.exit_slot(L[k])) for k in range(1, n)]
                    st.append((S.enter_slot(L[-1]), S.marked_slot(w.end)))
            self.strands.append(st)

    def node(self, item, k, backward):
        return self._base[item] + 2 * k + (1 if backward else 0)

    def _rank_rays(self):
        N = self.N
        self._base = []
        total = 0
        for st in self.strands:
            self._base.append(total)
            total += 2 * len(st)
        sent = total
        sym = np.zeros(total + 1, dtype=np.int64)
        nxt = np.full(total + 1, sent, dtype=np.int64)
        for i, (w, st) in enumerate(zip(self.items, self.strands)):
            m = len(st)
            base = self._base[i]
            ks = np.arange(m)
            ent = np.array([s[0] for s in st], dtype=np.int64)
            ext = np.array([s[1] for s in st], dtype=np.int64)
            fwd = base + 2 * ks
            bwd = fwd + 1
            sym[fwd] = N - (ext - ent) % N
            sym[bwd] = N - (ent - ext) % N
            if w.is_curve:
                nxt[fwd] = base + 2 * ((ks + 1) % m)
                nxt[bwd] = base + 2 * ((ks - 1) % m) + 1
            else:
                nxt[fwd[:-1]] = fwd[1:]
                nxt[bwd[1:]] = bwd[:-1]
        _, rank = np.unique(sym, return_inverse=True)
        rank = rank.astype(np.int64)
        jump = nxt
        classes = rank.max() + 1
        self.levels = [(rank, jump)]
        while True:
            pair = rank * (classes + 1) + rank[jump]
            _, new = np.unique(pair, return_inverse=True)
            new = new.astype(np.int64)
            jump = jump[jump]
            new_classes = new.max() + 1
            rank = new
            if new_classes == classes:
                break
            self.levels.append((rank, jump))
            classes = new_classes
        # rank at the stable level orders rays lexicographically
        self.rank = rank
        self.sym = sym

    def lcp(self, u, v):
        """Common prefix length of two rays; None if they never part."""
        if self.rank[u] == self.rank[v]:
            return None
        n = 0
        for k in range(len(self.levels) - 1, -1, -1):
            r, j = self.levels[k]
            if r[u] == r[v]:
                n += 1 << k
                u, v = j[u], j[v]
        return n, u, v

    def _compare_points(self, p, q):
        """Order of two chord points along the chord (by t)."""
        (pa, pb), (qa, qb) = p[:2], q[:2]
        la = self.lcp(pa, qa)
        lb = self.lcp(pb, qb)
        if la is None and lb is None:
            return 0
        if lb is None or (la is not None and la[0] <= lb[0]):
            _, u, v = la
            return 1 if self.sym[u] > self.sym[v] else -1
        _, u, v = lb
        return -1 if self.sym[u] > self.sym[v] else 1

    # -- points on polygon sides -------------------------------------------------

    def _place_points(self):
        S, rank = self.S, self.rank
        by_chord = {}
        marked = {}
        self.ties = False
        # endpoint ids: ('x', item, k, side) for crossing k, ('p', item, which)
        for i, (w, st) in enumerate(zip(self.items, self.strands)):
            L = w.letters
            for k, l in enumerate(L):
                j = abs(l)
                if l > 0:
                    ray_a = self.node(i, k, True)
                    ray_b = self.node(i, (k + 1) % len(st), False)
                else:
                    ray_b = self.node(i, k, True)
                    ray_a = self.node(i, (k + 1) % len(st), False)
                by_chord.setdefault(j, []).append((ray_a, ray_b, i, k))
            if not w.is_curve:
                m = len(st)
                marked.setdefault(w.start, []).append((rank[self.node(i, 0, False)], i, 0))
                marked.setdefault(w.end, []).append((rank[self.node(i, m - 1, True)], i, 1))
        slot_pts = {}
        for j, lst in by_chord.items():
            lst.sort(key=cmp_to_key(self._compare_points))
            for x, y in zip(lst, lst[1:]):
                if self._compare_points(x, y) == 0:
                    self.ties = True
            slot_pts[S.slot_a(j)] = [('x', i, k, 'a') for (_, _, i, k) in lst]
            slot_pts[S.slot_b(j)] = [('x', i, k, 'b') for (_, _, i, k) in reversed(lst)]
        for p, lst in marked.items():
            lst.sort()
            self._note_ties([x[:1] for x in lst])
            slot_pts[S.marked_slot(p)] = [('p', i, which) for (_, i, which) in lst]
        self.slot_points = slot_pts
        pos = {}
        counter = 0
        self.slot_start = []
        for s in range(self.N):
            self.slot_start.append(counter)
            for pt in slot_pts.get(s, ()):
                pos[pt] = counter
                counter += 1
        self.n_points = counter
        self.pos = pos
        # strand endpoint positions in forward direction
        self.ends = []
        for i, (w, st) in enumerate(zip(self.items, self.strands)):
            L = w.letters
            m = len(st)
            e = np.zeros((m, 2), dtype=np.int64)
            for k in range(m):
                if w.is_curve:
                    prev = L[k - 1]
                    e[k, 0] = pos[('x', i, (k - 1) % m, 'b' if prev > 0 else 'a')]
                    e[k, 1] = pos[('x', i, k, 'a' if L[k] > 0 else 'b')]
                else:
                    if k == 0:
                        e[k, 0] = pos[('p', i, 0)]
                    else:
                        e[k, 0] = pos[('x', i, k - 1, 'b' if L[k - 1] > 0 else 'a')]
                    if k == m - 1:
                        e[k, 1] = pos[('p', i, 1)]
                    else:
                        e[k, 1] = pos[('x', i, k, 'a' if L[k] > 0 else 'b')]
            self.ends.append(e)

    def _note_ties(self, keys):
        for a, b in zip(keys, keys[1:]):
            if a == b:
                self.ties = True

    # -- crossings ---------------------------------------------------------------

    def crossings(self, i, j):
        """Number of crossings between the strands of items i and j."""
        return count_interleavings(self.ends[i], self.ends[j])

    def self_crossings(self, i):
        return count_interleavings(self.ends[i], self.ends[i]) // 2

    def crossing_pairs(self, i, j):
        """Array of (strand of i, strand of j) index pairs that cross."""
        A = np.sort(self.ends[i], axis=1)
        B = np.sort(self.ends[j], axis=1)
        la, ra = A[:, 0][:, None], A[:, 1][:, None]
        lb, rb = B[:, 0][None, :], B[:, 1][None, :]
        inside = (lb > la) & (lb < ra)
        inside_r = (rb > la) & (rb < ra)
        return np.argwhere(inside ^ inside_r)

    def ray_order(self, i, which_end_i, j, which_end_j):
        """Compare the departure of two arcs sharing a marked point.

        Returns +1 if arc j leaves counterclockwise-after arc i, -1 if
        before and 0 if the two rays agree forever.
        """
        ri = self._end_rank(i, which_end_i)
        rj = self._end_rank(j, which_end_j)
        return int(rj > ri) - int(rj < ri)

    def _end_rank(self, i, which):
        m = len(self.strands[i])
        node = self.node(i, 0, False) if which == 0 else self.node(i, m - 1, True)
        return self.rank[node]

    def is_right_of(self, pos_point, a, b):
        """True if ``pos_point`` lies counterclockwise strictly between a and b."""
        M = self.n_points
        return 0 < (pos_point - a) % M < (b - a) % M


def count_interleavings(A, B):
    """Count pairs (a in A, b in B) of chords whose endpoints interleave."""
    if len(A) == 0 or len(B) == 0:
        return 0
    A = np.sort(np.asarray(A), axis=1)
    B = np.sort(np.asarray(B), axis=1)
    if len(A) * len(B) <= 4_000_000:
        la, ra = A[:, 0][:, None], A[:, 1][:, None]
        lb, rb = B[:, 0][None, :], B[:, 1][None, :]
        x = ((lb > la) & (lb < ra)) ^ ((rb > la) & (rb < ra))
        return int(x.sum())
    # endpoints of A strictly inside each B chord, minus twice the A chords
    # nested inside it
    ends = np.sort(A.ravel())
    e_in = (np.searchsorted(ends, B[:, 1], side='left')
            - np.searchsorted(ends, B[:, 0], side='right'))
    nested = _count_nested(A, B)
    return int(e_in.sum() - 2 * nested)


def _count_nested(A, B):
    """Sum over b of #{a : lb < la and ra < rb}."""
    size = int(max(A.max(), B.max())) + 2
    tree = [0] * (size + 1)

    def add(x):
        x += 1
        while x <= size:
            tree[x] += 1
            x += x & -x

    def prefix(x):
        x += 1
        s = 0
        while x > 0:
            s += tree[x]
            x -= x & -x
        return s

    a_order = np.argsort(A[:, 1], kind='stable')
    b_order = np.argsort(B[:, 1], kind='stable')
    total = 0
    inserted = 0
    ai = 0
    for bi in b_order:
        lb, rb = B[bi]
        while ai < len(a_order) and A[a_order[ai], 1] < rb:
            add(int(A[a_order[ai], 0]))
            inserted += 1
            ai += 1
        total += inserted - prefix(int(lb))
    return total


def boundary_loop(S, i):
    """Word of the loop based at p_i running once around B_i."""
    if i == 1:
        return tuple(S.generators)
    return (i,)


def loop_is_peripheral(S, i, word):
    return fw.power_of(fw.free_reduce(word), boundary_loop(S, i)) is not None
