"""
Monodromies as Dehn twist words.

A :class:`TwistWord` lists ``(curve, exponent)`` factors and is read as a
composition: the rightmost factor acts first.  Positive exponents are
right-handed twists: an arc meeting the core curve turns right onto it
(with the counterclockwise orientation of the cut-open polygon).  With
this convention positive boundary twists are right-veering.
"""
from dataclasses import dataclass, field


from .arrangement import Arrangement
from .errors import InvalidArgument, InvalidCurve
from .surface import (ArcWord, CurveWord, PlanarSurface, _valid, boundary_curve,
                      curve_from_partition, is_boundary_parallel, make_surface,
                      same_class)
from . import words as fw

# turning direction of a positive twist, fixed by calibration so that
# tau_B is right-veering at B
RIGHT_TURN = True


@dataclass(frozen=True)
class TwistWord:
    factors: tuple = ()

    def __post_init__(self):
        facs = []
        for c, e in self.factors:
            if not isinstance(e, int) or isinstance(e, bool):
                raise InvalidArgument("twist exponents must be integers")
            if e:
                facs.append((c, e))
        object.__setattr__(self, 'factors', tuple(facs))

    def __len__(self):
        return len(self.factors)

    def __mul__(self, other):
        """``self * other`` applies ``other`` first."""
        return TwistWord(self.factors + other.factors)

    def inverse(self):
        return TwistWord(tuple((c, -e) for c, e in reversed(self.factors)))

    @classmethod
    def identity(cls):
        return cls(())

    def curves(self):
        seen = []
        for c, _ in self.factors:
            if not any(same_class(c, d) for d in seen):
                seen.append(c)
        return seen


def twist(S, c, e):
    """The single-factor word tau_c^e."""
    return TwistWord(((c, e),))


@dataclass(frozen=True)
class OpenBook:
    surface: PlanarSurface
    monodromy: TwistWord = field(default_factory=TwistWord)
    metadata: tuple = ()

    @property
    def meta(self):
        return dict(self.metadata)

    def with_meta(self, **kw):
        d = dict(self.metadata)
        d.update(kw)
        return OpenBook(self.surface, self.monodromy, tuple(sorted(d.items())))


@dataclass(frozen=True)
class ConstructionParams:
    boundary: int
    exponents: tuple

    @property
    def m(self):
        return len(self.exponents)


@dataclass(frozen=True)
class FamilyParams:
    p: int
    n1: int
    n2: int
    n3: int
    n4: int

    @property
    def n(self):
        return (self.n1, self.n2, self.n3, self.n4)

    def as_tuple(self):
        return (self.p,) + self.n


# -- the action on curves and arcs ------------------------------------------------

def _reduce(x, letters):
    if x.is_curve:
        return CurveWord(fw.canonical_cyclic(letters))
    return ArcWord(x.start, x.end, fw.free_reduce(letters))


def twist_word(S, c, e, x):
    """Image of the reduced word ``x`` under tau_c^e."""
    if e == 0 or same_class(c, x):
        return x
    arr = Arrangement(S, [x, c])
    pairs = arr.crossing_pairs(0, 1)
    if len(pairs) == 0:
        return x
    M = arr.n_points
    xe, ce = arr.ends[0], arr.ends[1]
    cl = c.letters
    loops = {}
    for s, t in pairs:
        a, b = xe[s]
        p, q = ce[t]
        span = (b - a) % M
        q_right = 0 < (q - a) % M < span
        right = q if q_right else p
        # travel towards the right endpoint when turning right
        forward = q_right == ((e > 0) == RIGHT_TURN)
        if forward:
            loop = cl[t:] + cl[:t]
        else:
            loop = fw.invert(cl[t:] + cl[:t])
        loops.setdefault(int(s), []).append(((right - a) % M, loop * abs(e)))
    L = x.letters
    n_strands = len(arr.strands[0])
    out = []
    for k in range(n_strands):
        for _, loop in sorted(loops.get(k, ())):
            out.extend(loop)
        if k < len(L):
            out.append(L[k])
    return _reduce(x, out)


def apply(S, phi, x):
    x = _valid(S, x)
    for c, e in reversed(phi.factors):
        x = twist_word(S, c, e, x)
    return x


# -- equality of mapping classes ------------------------------------------------------

def filling_arcs(S):
    """Arcs p_1 -> p_j crossing no chord; together they cut S into a disc."""
    return [ArcWord(1, j, ()) for j in S.generators]


def check_filling_system(S):
    from .invariants import arc_system_fills
    if not arc_system_fills(S, filling_arcs(S)):
        raise AssertionError("reference arc system does not fill")
    return True


def mcg_equal(S, phi, psi, S2=None):
    if S2 is not None and S2 != S:
        raise InvalidArgument("mapping classes live on different surfaces")
    _check_word(S, phi)
    _check_word(S, psi)
    for a in filling_arcs(S):
        if apply(S, phi, a) != apply(S, psi, a):
            return False
    return True


def _check_word(S, phi):
    if not isinstance(phi, TwistWord):
        raise InvalidArgument("expected a TwistWord")
    for c, _ in phi.factors:
        if not isinstance(c, CurveWord):
            raise InvalidCurve("twist factors must be closed curves")
        S.check_letters(c.letters)


def normalize_word(S, phi):
    """Canonicalise every factor curve (raises on non-embedded curves)."""
    facs = []
    for c, e in phi.factors:
        c = _valid(S, c)
        if not c.is_curve:
            raise InvalidCurve("twist factors must be closed curves")
        facs.append((c, e))
    return TwistWord(tuple(facs))


# -- capping off ------------------------------------------------------------------

def cap_map(S, i):
    """Substitution images for capping B_i, in the new surface's letters."""
    b = S.boundary_count
    if b < 2:
        raise InvalidArgument("cannot cap off the only boundary component")
    images = {}
    if i == 1:
        # old B_2 becomes the outer boundary; x_2 = (x_3 ... x_b)^-1
        for j in range(3, b + 1):
            images[j] = (j - 1,)
        images[2] = fw.invert(tuple(range(2, b)))
    else:
        for j in range(2, b + 1):
            if j < i:
                images[j] = (j,)
            elif j == i:
                images[j] = ()
            else:
                images[j] = (j - 1,)
    return images


def relabel_after_cap(i, label):
    if label == i:
        return None
    return label - 1 if label > i else label


def cap_curve(S, i, c):
    """The curve ``c`` after capping B_i, or None if it becomes inessential."""
    w = fw.canonical_cyclic(fw.substitute(c.letters, cap_map(S, i)))
    return CurveWord(w) if w else None


def cap_off(ob, i):
    S = ob.surface
    if S.boundary_count < 2:
        raise InvalidArgument("capping off needs at least two boundary components")
    S.check_label(i)
    S2 = make_surface(S.boundary_count - 1)
    facs = []
    for c, e in ob.monodromy.factors:
        d = cap_curve(S, i, c)
        if d is not None:
            facs.append((d, e))
    meta = dict(ob.metadata)
    capped = tuple(meta.get('capped', ())) + (i,)
    meta['capped'] = capped
    gammas = []
    for g in meta.get('gammas', ()):
        d = cap_curve(S, i, CurveWord(g))
        if d is not None and is_boundary_parallel(S2, d) is None:
            gammas.append(d.letters)
    meta['gammas'] = tuple(gammas)
    meta['cap_targets'] = tuple(relabel_after_cap(i, t) for t in meta.get('cap_targets', ())
                                if t != i)
    for key in ('family', 'construction', 'arcs', 'alpha', 'beta', 'new_boundaries'):
        meta.pop(key, None)
    return OpenBook(S2, TwistWord(tuple(facs)), tuple(sorted(meta.items())))


def cap_off_many(ob, labels):
    """Cap several boundaries, given by their labels on ``ob``; returns the
    open book and the list of labels used at each step."""
    steps = []
    current = list(labels)
    for _ in range(len(current)):
        i = current.pop(0)
        steps.append(i)
        ob = cap_off(ob, i)
        current = [relabel_after_cap(i, l) for l in current]
    return ob, steps


# -- Construction on a boundary component ------------------------------------------------

def build_construction(ob, params):
    S = ob.surface
    B = params.boundary
    if not isinstance(B, int) or B not in S.labels:
        raise InvalidArgument("unknown boundary %r" % (B,))
    m = params.m
    if m < 2:
        raise InvalidArgument("the construction needs m >= 2 new boundary components")
    b = S.boundary_count
    S2 = make_surface(b + m - 1)
    # B keeps its label as B'_m; B'_1..B'_{m-1} are inserted right after it
    new = tuple(range(B + 1, B + m))
    images = {}
    for j in range(2, b + 1):
        if j < B:
            images[j] = (j,)
        elif j == B:
            images[j] = tuple(range(B, B + m))
        else:
            images[j] = (j + m - 1,)
    if B == 1:
        for j in range(2, b + 1):
            images[j] = (j + m - 1,)
    facs = []
    for c, e in ob.monodromy.factors:
        facs.append((CurveWord(fw.canonical_cyclic(fw.substitute(c.letters, images))), e))
    gamma = curve_from_partition(S2, {B} | set(new))
    ns = tuple(params.exponents)
    primes = new + (B,)          # B'_1 .. B'_m
    local = [(gamma, -ns[-1])]
    for lab, n in zip(primes, ns):
        local.append((boundary_curve(S2, lab), n))
    phi = TwistWord(tuple(facs)) * TwistWord(tuple(local))
    old = ob.meta
    gammas = tuple(fw.canonical_cyclic(fw.substitute(g, images)) for g in old.get('gammas', ()))
    targets = tuple(_shift_label(t, B, m) for t in old.get('cap_targets', ()))
    meta = {
        'construction': (B, ns),
        'new_boundaries': primes,
        'gammas': gammas + (gamma.letters,),
        'cap_targets': tuple(sorted(targets + new)),
    }
    return OpenBook(S2, phi, tuple(sorted(meta.items())))


def _shift_label(t, B, m):
    return t + m - 1 if t > B else t


def construction_gammas(ob):
    return [CurveWord(g) for g in ob.meta.get('gammas', ())]


# -- the four-holed sphere family --------------------------------------------------------------

def family_curves(S):
    """alpha and beta on the four-holed sphere.

    alpha separates {B_1, B_2} from {B_3, B_4}; beta separates {B_2, B_3}
    from {B_1, B_4}.  Capping B_2 turns alpha into a curve parallel to B_1.
    """
    return curve_from_partition(S, {1, 2}), curve_from_partition(S, {2, 3})


def family_arcs(S):
    """gamma_1 from p_1 to p_2 and gamma_2 from p_4 to p_3.

    Each crosses beta once and alpha twice.  Arcs missing alpha altogether
    see one more boundary-proximate crossing under phi_v (see
    :func:`planarbook.invariants.kr_count`).
    """
    return ArcWord(1, 2, (-4,)), ArcWord(4, 3, (2,))


def build_family(v):
    if not isinstance(v, FamilyParams):
        v = FamilyParams(*v)
    S = make_surface(4)
    alpha, beta = family_curves(S)
    p, n1, n2, n3, n4 = v.as_tuple()
    facs = [(alpha, -n1 - 1), (beta, p)]
    for i, n in zip((1, 2, 3, 4), (n1, n2, n3, n4)):
        facs.append((boundary_curve(S, i), n))
    g1, g2 = family_arcs(S)
    meta = {
        'family': v.as_tuple(),
        'alpha': alpha.letters,
        'beta': beta.letters,
        'arcs': (('gamma1', (g1.start, g1.end, g1.letters)),
                 ('gamma2', (g2.start, g2.end, g2.letters))),
    }
    return OpenBook(S, TwistWord(tuple(facs)), tuple(sorted(meta.items())))


def named_arcs(ob):
    return {name: ArcWord(s, e, tuple(l)) for name, (s, e, l) in dict(ob.metadata).get('arcs', ())}


def strip_boundary_twists(S, phi):
    facs = []
    exps = {}
    for c, e in phi.factors:
        B = is_boundary_parallel(S, c)
        if B is None:
            facs.append((c, e))
        else:
            exps[B] = exps.get(B, 0) + e
    return TwistWord(tuple(facs)), exps


def boundary_product(S, exps):
    return TwistWord(tuple((boundary_curve(S, B), e) for B, e in sorted(exps.items()) if e))
