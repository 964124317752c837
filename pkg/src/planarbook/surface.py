"""
Planar surfaces, curves and arcs.

The b-holed sphere is modelled as a disc with outer boundary B_1 and
holes B_2..B_b.  Chord c_j runs from B_1 to B_j; the chords leave B_1
counterclockwise of the marked point p_1 in index order.  Cutting along
all chords leaves one polygon whose sides, read counterclockwise, are

    B_1 | c_2^a  B_2  c_2^b | B_1 | c_3^a  B_3  c_3^b | ... | c_b^b

(the four-slot block repeats once per chord).  Side c_j^a is traversed
from B_1 towards B_j and c_j^b back out, so gluing them reverses the
counterclockwise parameter.

A curve or arc is recorded by the chords it crosses.  Letter ``+j``
leaves the polygon through c_j^a and re-enters through c_j^b; ``-j`` is
the opposite crossing.  Reduced words are exactly the words with no
bigon against the cut system, so a reduced cyclic word determines a
free isotopy class of curves and a reduced linear word with endpoints
determines an arc up to isotopy fixing its endpoints.

Orientation: the polygon carries the counterclockwise orientation and
positive Dehn twists are right-handed (see :mod:`planarbook.mcg`).
"""
from dataclasses import dataclass, field

from .errors import InvalidArgument, InvalidCurve
from . import words as fw


@dataclass(frozen=True)
class PlanarSurface:
    boundary_count: int

    def __post_init__(self):
        if not isinstance(self.boundary_count, int) or self.boundary_count < 1:
            raise InvalidArgument(
                "boundary count must be a positive integer, got %r" % (self.boundary_count,))

    # -- slot layout of the cut-open polygon ---------------------------------

    @property
    def labels(self):
        return tuple(range(1, self.boundary_count + 1))

    @property
    def generators(self):
        return tuple(range(2, self.boundary_count + 1))

    @property
    def n_slots(self):
        return max(1, 4 * (self.boundary_count - 1))

    def slot_a(self, j):
        return 4 * (j - 2) + 1

    def slot_b(self, j):
        return 4 * (j - 2) + 3

    def marked_slot(self, i):
        return 0 if i == 1 else 4 * (i - 2) + 2

    def exit_slot(self, letter):
        return self.slot_a(letter) if letter > 0 else self.slot_b(-letter)

    def enter_slot(self, letter):
        return self.slot_b(letter) if letter > 0 else self.slot_a(-letter)

    def slot_kind(self, slot):
        """('seg', 1) for a piece of B_1, ('hole', i), ('a', j) or ('b', j)."""
        if self.boundary_count == 1:
            return ('seg', 1)
        r, q = slot % 4, slot // 4 + 2
        return [('seg', 1), ('a', q), ('hole', q), ('b', q)][r]

    def slot_boundary(self, slot):
        kind, idx = self.slot_kind(slot)
        if kind == 'seg':
            return 1
        if kind == 'hole':
            return idx
        return None

    @property
    def cut_system(self):
        return tuple((1, j) for j in self.generators)

    @property
    def disc_boundary_word(self):
        names = {'seg': 'B1', 'hole': 'B%d', 'a': 'c%d+', 'b': 'c%d-'}
        out = []
        for s in range(self.n_slots):
            kind, idx = self.slot_kind(s)
            out.append(names[kind] if kind == 'seg' else names[kind] % idx)
        return tuple(out)

    @property
    def euler_characteristic(self):
        return 2 - self.boundary_count

    def check_invariants(self):
        """Face-trace the polygon glued along the chords."""
        word = self.disc_boundary_word
        for j in self.generators:
            if word.count('c%d+' % j) != 1 or word.count('c%d-' % j) != 1:
                raise AssertionError("chord c%d must appear twice" % j)
        for i in self.labels:
            name = 'B%d' % i
            if name not in word:
                raise AssertionError("boundary %s has no segment" % name)
        # one polygon face, chords are the glued edges
        faces, glued = 1, len(self.generators)
        if faces - glued != self.euler_characteristic:
            raise AssertionError("Euler characteristic mismatch")
        return True

    def check_label(self, i):
        if i not in self.labels:
            raise InvalidArgument("unknown boundary B_%r on a surface with %d boundaries"
                                  % (i, self.boundary_count))
        return i

    def check_letters(self, letters):
        for a in letters:
            if not isinstance(a, int) or a == 0 or abs(a) not in self.generators:
                raise InvalidArgument("letter %r does not name a chord of this surface" % (a,))


def make_surface(b):
    if not isinstance(b, int) or isinstance(b, bool) or b <= 0:
        raise InvalidArgument("a planar surface needs b >= 1 boundary components")
    S = PlanarSurface(b)
    S.check_invariants()
    return S


@dataclass(frozen=True)
class CurveWord:
    """Cyclic sequence of signed chord crossings."""
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    @property
    def is_curve(self):
        return True


@dataclass(frozen=True)
class ArcWord:
    """Arc from marked point p_start to p_end crossing the chords in order."""
    start: int
    end: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    @property
    def is_curve(self):
        return False

    def reversed(self):
        return ArcWord(self.end, self.start, fw.invert(self.letters))

    def attachment(self, S):
        """Polygon sides through which the arc leaves its two endpoints."""
        if not self.letters:
            return (S.marked_slot(self.end), S.marked_slot(self.start))
        return (S.exit_slot(self.letters[0]), S.enter_slot(self.letters[-1]))


@dataclass(frozen=True)
class MultiCurve:
    components: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'components', frozenset(self.components))

    def __iter__(self):
        return iter(sorted(self.components, key=lambda c: (len(c), c.letters)))

    def __len__(self):
        return len(self.components)


# -- canonical forms -----------------------------------------------------------

def _reduced(S, w):
    S.check_letters(w.letters)
    if w.is_curve:
        return CurveWord(fw.canonical_cyclic(w.letters))
    S.check_label(w.start)
    S.check_label(w.end)
    return ArcWord(w.start, w.end, fw.free_reduce(w.letters))


def same_class(a, b):
    """Isotopy equality of two reduced words (curves unoriented, arcs rel ends)."""
    if a.is_curve != b.is_curve:
        return False
    if a.is_curve:
        return fw.canonical_cyclic(a.letters) == fw.canonical_cyclic(b.letters)
    return a == b or a == b.reversed()


def normalize(S, w):
    """Reduced canonical representative of ``w``; raises if not embedded."""
    r = _reduced(S, w)
    if not is_embedded(S, r):
        raise InvalidCurve("word %r is not realised by an embedded %s"
                           % (w.letters, 'curve' if w.is_curve else 'arc'))
    return r


def is_embedded(S, w):
    from .arrangement import Arrangement
    if not isinstance(w, (CurveWord, ArcWord)):
        raise InvalidArgument("expected a CurveWord or ArcWord")
    S.check_letters(w.letters)
    if w.is_curve:
        if not w.letters:
            raise InvalidArgument("empty curve word")
        w = CurveWord(fw.canonical_cyclic(w.letters))
        if not w.letters:
            return True  # null-homotopic, bounds a disc
        if fw.is_proper_power(w.letters):
            return False
    else:
        S.check_label(w.start)
        S.check_label(w.end)
        w = ArcWord(w.start, w.end, fw.free_reduce(w.letters))
        if not w.letters and w.start == w.end:
            return True
    return Arrangement(S, [w]).self_crossings(0) == 0


def is_essential(w):
    if w.is_curve:
        return bool(fw.canonical_cyclic(w.letters))
    return bool(fw.free_reduce(w.letters)) or w.start != w.end


def _check_curve(S, c):
    if not isinstance(c, CurveWord):
        raise InvalidCurve("expected a closed curve")
    r = _reduced(S, c)
    if not r.letters:
        raise InvalidCurve("curve is empty or inessential")
    return r


def partition(S, c):
    """The boundary labels on the side of ``c`` away from B_1."""
    c = _check_curve(S, c)
    sums = {}
    for a in c.letters:
        sums[abs(a)] = sums.get(abs(a), 0) + (1 if a > 0 else -1)
    return frozenset(j for j, s in sums.items() if s != 0)


def curve_from_partition(S, inside):
    inside = frozenset(inside)
    for i in inside:
        S.check_label(i)
    if not inside or len(inside) == S.boundary_count:
        raise InvalidArgument("partition side must be a proper nonempty subset")
    if 1 in inside:
        inside = frozenset(S.labels) - inside
    return CurveWord(fw.canonical_cyclic(tuple(sorted(inside))))


def boundary_curve(S, i):
    S.check_label(i)
    if S.boundary_count < 2:
        raise InvalidArgument("the disc has no essential boundary curve")
    return curve_from_partition(S, {i})


def is_boundary_parallel(S, c):
    if isinstance(c, CurveWord) and not fw.canonical_cyclic(c.letters):
        raise InvalidCurve("empty curve word")
    side = partition(S, c)
    if len(side) == 1:
        return next(iter(side))
    if len(side) == S.boundary_count - 1:
        return 1
    return None


def same_side_partition(S, c):
    """Both sides of the partition induced by ``c``."""
    side = partition(S, c)
    return side, frozenset(S.labels) - side


def geometric_intersection(S, a, b):
    from .arrangement import Arrangement
    a = _valid(S, a)
    b = _valid(S, b)
    if same_class(a, b):
        return 0
    return Arrangement(S, [a, b]).crossings(0, 1)


def _valid(S, w):
    if not isinstance(w, (CurveWord, ArcWord)):
        raise InvalidCurve("expected a CurveWord or ArcWord")
    try:
        r = _reduced(S, w)
    except InvalidArgument as e:
        raise InvalidCurve(str(e))
    if not is_essential(r):
        raise InvalidCurve("inessential word")
    if not is_embedded(S, r):
        raise InvalidCurve("word %r is not embedded" % (w.letters,))
    return r


def make_multicurve(S, curves):
    comps = []
    for c in curves:
        c = _valid(S, c)
        if not c.is_curve:
            raise InvalidCurve("multicurve components must be closed curves")
        if any(same_class(c, d) for d in comps):
            raise InvalidCurve("multicurve components must be pairwise non-isotopic")
        for d in comps:
            if geometric_intersection(S, c, d):
                raise InvalidCurve("multicurve components must be disjoint")
        comps.append(c)
    return MultiCurve(frozenset(comps))


def radial_arc(S, i, j=None):
    """The arc from p_i to p_j crossing no chord (j defaults to a neighbour)."""
    S.check_label(i)
    if j is None:
        j = 2 if i == 1 else 1
    S.check_label(j)
    if i == j:
        raise InvalidArgument("radial arcs join distinct boundaries")
    return ArcWord(i, j, ())
