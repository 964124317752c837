"""
JSON documents for open books and analysis reports.

An open book document looks like::

    {"schema": "planarbook/openbook", "version": 1,
     "boundary_count": 4,
     "monodromy": [{"curve": {"partition": [1, 2]}, "power": -7},
                   {"curve": {"boundary": 1}, "power": 6},
                   {"curve": {"word": [-4, -3]}, "power": 1}],
     "metadata": {"family": [1, 6, 6, 6, 6]}}

Metadata values are nested lists; they come back as nested tuples.
Curves are emitted in the shortest form that names them exactly: a
boundary label, a partition whose canonical curve is the factor, or the
raw crossing word.
"""
import json
from fractions import Fraction

from .errors import InvalidArgument, InvalidCurve
from .mcg import OpenBook, TwistWord
from .surface import (ArcWord, CurveWord, _valid, boundary_curve, curve_from_partition,
                      is_boundary_parallel, make_surface, partition)

SCHEMA_OPENBOOK = 'planarbook/openbook'
SCHEMA_REPORT = 'planarbook/report'
VERSION = 1


class ParseError(InvalidArgument):
    """A document that does not describe a valid open book."""

    def __init__(self, where, message):
        super().__init__("%s: %s" % (where, message))
        self.where = where


# -- curves ----------------------------------------------------------------------------

def curve_to_json(S, c):
    B = is_boundary_parallel(S, c)
    if B is not None and c == boundary_curve(S, B):
        return {'boundary': B}
    if S.boundary_count > 1:
        side = partition(S, c)
        if curve_from_partition(S, side) == c:
            return {'partition': sorted(side)}
    return {'word': list(c.letters)}


def curve_from_json(S, d, where='curve'):
    if not isinstance(d, dict) or len(d) != 1:
        raise ParseError(where, "expected one of {boundary, partition, word}")
    (kind, val), = d.items()
    try:
        if kind == 'boundary':
            if not isinstance(val, int) or isinstance(val, bool):
                raise ParseError(where, "boundary label must be an integer")
            return boundary_curve(S, val)
        if kind == 'partition':
            if not isinstance(val, list):
                raise ParseError(where, "partition must be a list of labels")
            return curve_from_partition(S, val)
        if kind == 'word':
            if not isinstance(val, list):
                raise ParseError(where, "word must be a list of letters")
            c = _valid(S, CurveWord(tuple(val)))
            if not c.is_curve:
                raise ParseError(where, "not a closed curve")
            return c
    except (InvalidArgument, InvalidCurve) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(where, str(e))
    raise ParseError(where, "unknown curve kind %r" % (kind,))


def arc_to_json(a):
    return {'start': a.start, 'end': a.end, 'word': list(a.letters)}


def arc_from_json(S, d, where='arc'):
    try:
        a = ArcWord(d['start'], d['end'], tuple(d.get('word', ())))
        return _valid(S, a)
    except (KeyError, TypeError):
        raise ParseError(where, "arcs need start, end and word")
    except (InvalidArgument, InvalidCurve) as e:
        raise ParseError(where, str(e))


# -- open books ----------------------------------------------------------------------------

def _to_tuples(x):
    if isinstance(x, list):
        return tuple(_to_tuples(v) for v in x)
    return x


def _to_lists(x):
    if isinstance(x, tuple):
        return [_to_lists(v) for v in x]
    return x


def openbook_to_json(ob):
    S = ob.surface
    return {
        'schema': SCHEMA_OPENBOOK,
        'version': VERSION,
        'boundary_count': S.boundary_count,
        'monodromy': [{'curve': curve_to_json(S, c), 'power': e}
                      for c, e in ob.monodromy.factors],
        'metadata': {k: _to_lists(v) for k, v in ob.metadata},
    }


def openbook_from_json(d):
    if not isinstance(d, dict):
        raise ParseError('document', "expected a JSON object")
    if d.get('schema', SCHEMA_OPENBOOK) != SCHEMA_OPENBOOK:
        raise ParseError('schema', "expected %r" % SCHEMA_OPENBOOK)
    if d.get('version', VERSION) != VERSION:
        raise ParseError('version', "unsupported version %r" % (d.get('version'),))
    b = d.get('boundary_count')
    if not isinstance(b, int) or isinstance(b, bool) or b < 1:
        raise ParseError('boundary_count', "must be a positive integer")
    S = make_surface(b)
    facs = []
    mono = d.get('monodromy', [])
    if not isinstance(mono, list):
        raise ParseError('monodromy', "must be a list")
    for k, f in enumerate(mono):
        where = 'monodromy[%d]' % k
        if not isinstance(f, dict) or 'curve' not in f:
            raise ParseError(where, "expected {curve, power}")
        power = f.get('power', 1)
        if not isinstance(power, int) or isinstance(power, bool):
            raise ParseError(where + '.power', "must be an integer")
        c = curve_from_json(S, f['curve'], where + '.curve')
        if power:
            facs.append((c, power))
    meta = d.get('metadata', {}) or {}
    if not isinstance(meta, dict):
        raise ParseError('metadata', "must be an object")
    metadata = tuple(sorted((k, _to_tuples(v)) for k, v in meta.items()))
    return OpenBook(S, TwistWord(tuple(facs)), metadata)


def parse_openbook(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError('line %d column %d' % (e.lineno, e.colno), e.msg)
    return openbook_from_json(d)


def emit_openbook(ob):
    return dumps(openbook_to_json(ob))


def dumps(d):
    return json.dumps(d, indent=2, sort_keys=True) + '\n'


# -- reports -------------------------------------------------------------------------------

def fraction_to_json(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else '%d/%d' % (x.numerator, x.denominator)


def bound_to_json(S, b):
    if b is None:
        return None
    return {
        'boundary': b.boundary,
        'kind': b.kind,
        'value': fraction_to_json(b.value),
        'provenance': b.provenance,
        'witness': witness_to_json(S, b.witness),
    }


def penner_to_json(S, p):
    if p is None:
        return None
    return {
        'gamma1': [curve_to_json(S, c) for c in p.gamma1],
        'gamma2': [curve_to_json(S, c) for c in p.gamma2],
        'checks': dict(p.checks),
        'diagnostics': list(p.diagnostics),
        'verdict': p.verdict,
    }


def witness_to_json(S, w):
    from .classify import CapOffWitness
    from .invariants import FdtcBound, PennerCertificate
    if w is None:
        return None
    if isinstance(w, ArcWord):
        return {'arc': arc_to_json(w)}
    if isinstance(w, CurveWord):
        return {'curve': curve_to_json(S, w)}
    if isinstance(w, FdtcBound):
        return bound_to_json(S, w)
    if isinstance(w, PennerCertificate):
        return penner_to_json(S, w)
    if isinstance(w, CapOffWitness):
        return {
            'capped': list(w.capped),
            'terminal': openbook_to_json(w.terminal),
            'boundary': w.boundary,
            'arc': arc_to_json(w.arc),
        }
    if isinstance(w, dict):
        return {k: witness_to_json(S, v) for k, v in w.items()}
    if isinstance(w, (tuple, list)):
        return [witness_to_json(S, v) for v in w]
    return w


def certificate_to_json(ob, cert):
    from .classify import RULES
    S = ob.surface
    verdicts = {}
    for name, v in cert.verdicts:
        verdicts[name] = {
            'status': v.status,
            'rule': v.rule,
            'citation': RULES.get(v.rule),
            'witness': witness_to_json(S, v.witness),
        }
    return {
        'verdicts': verdicts,
        'fdtc': [bound_to_json(S, b) for b in cert.bounds],
        'right_veering_search': [
            {'boundary': B, 'depth': d,
             'left_veering_arc': None if a is None else arc_to_json(a)}
            for B, d, a in cert.right_veering],
        'penner': penner_to_json(S, cert.penner),
        'config': dict(cert.config),
    }


def report(ob, cert, elapsed=None, version=None):
    """The full report; only ``header`` depends on the run."""
    from . import __version__
    return {
        'schema': SCHEMA_REPORT,
        'version': VERSION,
        'header': {'tool_version': version or __version__,
                   'elapsed_seconds': None if elapsed is None else round(elapsed, 3)},
        'input': openbook_to_json(ob),
        'certificate': certificate_to_json(ob, cert),
    }
