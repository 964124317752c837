"""
Contact-geometric verdicts for planar open books.

Each verdict is one of ``proved``, ``disproved`` or ``unknown`` and carries
the rule that produced it together with a witness that can be replayed.
The rules only fire when their hypotheses have been checked by the
routines in :mod:`planarbook.invariants`; anything else stays unknown.
"""
from dataclasses import dataclass
from itertools import combinations

from .errors import PlanarBookError
from .invariants import (exact_fdtc, fdtc_lower_bound, find_left_veering_arc,
                         is_left_veering_at, penner_certificate)
from .mcg import OpenBook, cap_off_many, mcg_equal, strip_boundary_twists
from .surface import (curve_from_partition, geometric_intersection, is_boundary_parallel,
                      same_class)

PROVED, DISPROVED, UNKNOWN = 'proved', 'disproved', 'unknown'

PROPERTIES = ('tight', 'universally_tight', 'overtwisted', 'contact_invariant_zero',
              'fillable', 'hyperbolic')

RULES = {
    'R1': "planar open book with fractional Dehn twist coefficient > 1 at every binding "
          "component supports a tight structure",
    'R2': "pseudo-Anosov monodromy with coefficient >= 2 at every binding component "
          "supports a universally tight structure",
    'R3': "pseudo-Anosov monodromy with coefficient > 4 at every binding component "
          "gives a hyperbolic manifold",
    'R4': "capping off sends a nonvanishing contact invariant to a nonvanishing one; "
          "the capped book is overtwisted, so the invariant vanishes",
    'R5': "for planar structures weak, strong and Stein fillability agree, and "
          "Stein fillable structures have nonvanishing contact invariant",
    'R6': "an open book that is not right-veering supports an overtwisted structure",
}


@dataclass(frozen=True)
class Verdict:
    status: str = UNKNOWN
    rule: str = None
    witness: object = None


@dataclass(frozen=True)
class CapOffWitness:
    capped: tuple          # labels as used at each capping step
    terminal: OpenBook
    boundary: int
    arc: object


@dataclass(frozen=True)
class Hints:
    gamma1: tuple = None
    gamma2: tuple = None
    reducing_curves: tuple = ()
    cap_targets: tuple = None      # tuple of label tuples
    depth: int = 4
    cap_depth: int = None
    subset_limit: int = 3


@dataclass(frozen=True)
class Certificate:
    verdicts: tuple                 # (property, Verdict) pairs
    bounds: tuple = ()              # FdtcBound per boundary
    right_veering: tuple = ()       # (boundary, depth searched, arc or None)
    penner: object = None
    config: tuple = ()

    def __getitem__(self, name):
        return dict(self.verdicts)[name]

    def status(self, name):
        return self[name].status


# -- the cap-off search ---------------------------------------------------------------------

def _subsets(labels, limit):
    labels = sorted(labels)
    for k in range(1, min(limit, len(labels) - 1) + 1):
        for sub in combinations(labels, k):
            yield sub


def cap_off_vanishing_search(ob, targets=None, depth=4, subset_limit=3):
    """First cap-off chain ending in a book with a left-veering arc.

    ``targets`` lists subsets of boundary labels to cap (labels of ``ob``);
    by default every subset of at most ``subset_limit`` labels is tried,
    smallest first.  Boundaries are capped from the largest label down.
    """
    S = ob.surface
    if S.boundary_count < 2:
        return None
    if targets is None:
        targets = list(_subsets(S.labels, subset_limit))
    for sub in targets:
        sub = tuple(sorted(set(sub), reverse=True))
        if not sub or len(sub) >= S.boundary_count:
            continue
        for i in sub:
            S.check_label(i)
        capped, steps = cap_off_many(ob, sub)
        for B in capped.surface.labels:
            arc = find_left_veering_arc(capped, B, depth)
            if arc is not None:
                return CapOffWitness(tuple(steps), capped, B, arc)
    return None


def replay_cap_witness(ob, w):
    """Re-run the cap-offs and re-check the terminal arc."""
    capped, _ = cap_off_many(ob, list(w.capped))
    if capped.surface != w.terminal.surface:
        return False
    if not mcg_equal(capped.surface, capped.monodromy, w.terminal.monodromy):
        return False
    return is_left_veering_at(capped, w.arc, w.boundary)


# -- evidence gathering -------------------------------------------------------------------

def candidate_reducing_curves(ob, extra=()):
    """Metadata curves, hinted curves and partition curves missing every twist curve."""
    S = ob.surface
    out = []

    def add(c):
        if is_boundary_parallel(S, c) is None and not any(same_class(c, d) for d in out):
            out.append(c)
    from .mcg import construction_gammas
    for c in list(construction_gammas(ob)) + list(extra):
        add(c)
    word_curves = ob.monodromy.curves()
    labels = S.labels
    for k in range(2, S.boundary_count - 1):
        for sub in combinations(labels[1:], k):
            c = curve_from_partition(S, sub)
            if all(geometric_intersection(S, c, d) == 0 for d in word_curves):
                add(c)
    return out


def default_certificate_curves(ob):
    """Split the non-boundary twist curves by the sign of their exponents."""
    S = ob.surface
    stripped, _ = strip_boundary_twists(S, ob.monodromy)
    pos, neg = [], []
    for c, e in stripped.factors:
        grp = pos if e > 0 else neg
        if not any(same_class(c, d) for d in grp):
            grp.append(c)
    if any(same_class(c, d) for c in pos for d in neg):
        return None
    if not pos and not neg:
        return None
    return pos, neg


def boundary_evidence(ob, depth=4, reducing=()):
    """Per boundary: an exact coefficient if available, else an arc-count
    lower bound; plus the bounded right-veering search."""
    S = ob.surface
    curves = candidate_reducing_curves(ob, reducing)
    bounds, veer = [], []
    for B in S.labels:
        arc = find_left_veering_arc(ob, B, depth)
        veer.append((B, depth, arc))
        bound = exact_fdtc(ob, B, curves)
        if bound is None and arc is None and S.boundary_count > 1:
            bound = fdtc_lower_bound(ob, B)
        bounds.append(bound)
    return bounds, veer


def _certified_value(bound, arc):
    """Coefficient value usable by the rules, or None."""
    if bound is None:
        return None
    if bound.kind == 'exact':
        return bound.value
    # arc counts need right-veering at B
    return bound.value if arc is None else None


# -- the classifier -------------------------------------------------------------------------

def classify(ob, hints=None):
    hints = hints or Hints()
    S = ob.surface
    depth = hints.depth
    cap_depth = hints.cap_depth if hints.cap_depth is not None else depth
    verdicts = {p: Verdict() for p in PROPERTIES}
    bounds, veer = boundary_evidence(ob, depth, hints.reducing_curves or ())

    # R6
    for B, _, arc in veer:
        if arc is not None:
            verdicts['overtwisted'] = Verdict(PROVED, 'R6', {'boundary': B, 'arc': arc})
            verdicts['tight'] = Verdict(DISPROVED, 'R6', {'boundary': B, 'arc': arc})
            break

    values = [_certified_value(b, arc) for b, (_, _, arc) in zip(bounds, veer)]
    known = all(v is not None for v in values) and S.boundary_count > 1

    def exact_or_integer_ok(b, v):
        # exact values need > 1; integer lower bounds need >= 2
        return v > 1 if b.kind == 'exact' else v >= 2

    # R1
    if known and all(exact_or_integer_ok(b, v) for b, v in zip(bounds, values)):
        if verdicts['tight'].status == DISPROVED:
            raise PlanarBookError("inconsistent evidence: tight and overtwisted")
        verdicts['tight'] = Verdict(PROVED, 'R1', {'bounds': tuple(bounds)})

    # R2, R3
    pen = None
    if hints.gamma1 is not None or hints.gamma2 is not None:
        curves = (tuple(hints.gamma1 or ()), tuple(hints.gamma2 or ()))
    else:
        curves = default_certificate_curves(ob)
    if curves is not None:
        try:
            pen = penner_certificate(ob, list(curves[0]), list(curves[1]))
        except ValueError:
            pen = None
    if pen is not None and pen.verdict and known:
        if all(v >= 2 for v in values):
            verdicts['universally_tight'] = Verdict(PROVED, 'R2', {'penner': pen,
                                                                   'bounds': tuple(bounds)})
            if verdicts['tight'].status != PROVED:
                verdicts['tight'] = Verdict(PROVED, 'R2', {'penner': pen,
                                                           'bounds': tuple(bounds)})
        if all(v > 4 for v in values):
            verdicts['hyperbolic'] = Verdict(PROVED, 'R3', {'penner': pen,
                                                            'bounds': tuple(bounds)})

    # R4
    if verdicts['overtwisted'].status == PROVED:
        w = verdicts['overtwisted'].witness
        verdicts['contact_invariant_zero'] = Verdict(
            PROVED, 'R4', CapOffWitness((), ob, w['boundary'], w['arc']))
    else:
        targets = hints.cap_targets
        if targets is None and ob.meta.get('cap_targets'):
            targets = [tuple(ob.meta['cap_targets'])]
        w = cap_off_vanishing_search(ob, targets, cap_depth, hints.subset_limit)
        if w is None and targets is not None and hints.cap_targets is None:
            w = cap_off_vanishing_search(ob, None, cap_depth, hints.subset_limit)
        if w is not None:
            verdicts['contact_invariant_zero'] = Verdict(PROVED, 'R4', w)

    # R5
    if verdicts['contact_invariant_zero'].status == PROVED:
        verdicts['fillable'] = Verdict(DISPROVED, 'R5', {'from': 'contact_invariant_zero'})

    config = (('cap_depth', cap_depth), ('depth', depth),
              ('subset_limit', hints.subset_limit))
    return Certificate(tuple((p, verdicts[p]) for p in PROPERTIES), tuple(bounds),
                       tuple(veer), pen, config)
