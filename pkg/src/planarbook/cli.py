"""
Command line interface.

    planarbook family --v 1,6,6,6,6 | planarbook analyze -
    planarbook construct book.json --boundary 2 --n 2,2
    planarbook batch manifest.json --out-dir results --workers 4

Curves and arcs on the command line are written ``boundary:2``,
``partition:2,3``, ``word:-4,-3`` or ``arc:1,2:-4`` (start, end, word);
several curves are separated by ``;``.  Documents are JSON (see
:mod:`planarbook.io`).  Exit status is 0 on success and 2 on invalid input.
"""
import argparse
import csv
import io as _io
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .classify import PROPERTIES, Hints, boundary_evidence, classify
from .errors import InvalidArgument, InvalidCurve
from .invariants import penner_certificate
from .io import (ParseError, arc_from_json, bound_to_json, curve_from_json, dumps,
                 emit_openbook, openbook_from_json, openbook_to_json, parse_openbook,
                 penner_to_json, report)
from .mcg import ConstructionParams, build_construction, build_family, cap_off
from .surface import geometric_intersection

OUT_DIR_ENV = 'PLANARBOOK_OUT_DIR'


# -- argument helpers ----------------------------------------------------------------------

def int_list(text):
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text)


def parse_item(S, text):
    """One curve or arc from the command-line shorthand."""
    kind, _, rest = text.strip().partition(':')
    where = repr(text)
    if kind == 'boundary':
        return curve_from_json(S, {'boundary': _int(rest, where)}, where)
    if kind == 'partition':
        return curve_from_json(S, {'partition': _ints(rest, where)}, where)
    if kind == 'word':
        return curve_from_json(S, {'word': _ints(rest, where)}, where)
    if kind == 'arc':
        ends, _, word = rest.partition(':')
        se = _ints(ends, where)
        if len(se) != 2:
            raise ParseError(where, "arcs are written arc:start,end:word")
        return arc_from_json(S, {'start': se[0], 'end': se[1], 'word': _ints(word, where)}, where)
    raise ParseError(where, "expected boundary:, partition:, word: or arc:")


def parse_items(S, text):
    if text is None:
        return None
    return [parse_item(S, t) for t in text.split(';') if t.strip()]


def _int(text, where):
    try:
        return int(text)
    except ValueError:
        raise ParseError(where, "expected an integer")


def _ints(text, where):
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise ParseError(where, "expected comma-separated integers")


def read_openbook(path):
    if path in (None, '-'):
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_openbook(text)


def write_text(text, path):
    """Write to ``path`` atomically, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix='.tmp-')
    with os.fdopen(fd, 'w') as fh:
        fh.write(text)
    os.replace(tmp, path)


def hints_from_args(S, args):
    targets = None
    if getattr(args, 'cap_targets', None):
        targets = tuple(tuple(int_list(t)) for t in args.cap_targets.split(';') if t.strip())
    return Hints(
        gamma1=_tuple_or_none(parse_items(S, getattr(args, 'gamma1', None))),
        gamma2=_tuple_or_none(parse_items(S, getattr(args, 'gamma2', None))),
        reducing_curves=tuple(parse_items(S, getattr(args, 'reducing', None)) or ()),
        cap_targets=targets,
        depth=args.depth,
        cap_depth=args.cap_depth,
        subset_limit=args.subset_limit,
    )


def _tuple_or_none(x):
    return None if x is None else tuple(x)


# -- tables ------------------------------------------------------------------------------------

BOUND_FIELDS = ['name', 'boundary', 'kind', 'value', 'provenance']


def bound_rows(name, ob, bounds):
    rows = []
    for B, b in zip(ob.surface.labels, bounds):
        if b is None:
            rows.append({'name': name, 'boundary': B, 'kind': 'unknown', 'value': '',
                         'provenance': ''})
        else:
            rows.append({'name': name, 'boundary': B, 'kind': b.kind,
                         'value': bound_to_json(ob.surface, b)['value'],
                         'provenance': b.provenance})
    return rows


def csv_text(rows, fields):
    buf = _io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator='\n')
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _plot_rows(rows):
    from fractions import Fraction
    out = []
    for r in rows:
        v = float(Fraction(r['value'])) if r['value'] != '' else None
        out.append((r['name'], r['boundary'], r['kind'], v))
    return out


# -- subcommands ---------------------------------------------------------------------------

def analyze_book(ob, hints):
    t0 = time.perf_counter()
    cert = classify(ob, hints)
    return report(ob, cert, time.perf_counter() - t0), cert


def cmd_analyze(args):
    ob = read_openbook(args.file)
    doc, cert = analyze_book(ob, hints_from_args(ob.surface, args))
    write_text(dumps(doc), args.out)
    rows = bound_rows('', ob, cert.bounds)
    if args.csv:
        write_text(csv_text(rows, BOUND_FIELDS), args.csv)
    if args.figure:
        from .plotting import plot_bounds
        plot_bounds(_plot_rows(rows), args.figure, title='coefficient per boundary')
    return 0


def cmd_construct(args):
    ob = read_openbook(args.file)
    out = build_construction(ob, ConstructionParams(args.boundary, tuple(args.n)))
    write_text(emit_openbook(out), args.out)
    return 0


def cmd_family(args):
    if len(args.v) != 5:
        raise InvalidArgument("--v needs five integers p,n1,n2,n3,n4")
    write_text(emit_openbook(build_family(tuple(args.v))), args.out)
    return 0


def cmd_cap_off(args):
    ob = read_openbook(args.file)
    write_text(emit_openbook(cap_off(ob, args.boundary)), args.out)
    return 0


def cmd_intersect(args):
    ob = read_openbook(args.file)
    S = ob.surface
    a, b = parse_item(S, args.a), parse_item(S, args.b)
    doc = {'a': args.a, 'b': args.b, 'intersection': geometric_intersection(S, a, b)}
    write_text(dumps(doc), args.out)
    if args.figure:
        from .plotting import plot_arrangement
        plot_arrangement(S, [a, b], args.figure, labels=[args.a, args.b])
    return 0


def cmd_fdtc(args):
    ob = read_openbook(args.file)
    bounds, veer = boundary_evidence(ob, args.depth)
    rows = bound_rows('', ob, bounds)
    if args.boundary is not None:
        ob.surface.check_label(args.boundary)
        rows = [r for r in rows if r['boundary'] == args.boundary]
    doc = {'fdtc': rows,
           'right_veering_search': [{'boundary': B, 'depth': d, 'violation_found': a is not None}
                                    for B, d, a in veer]}
    write_text(dumps(doc), args.out)
    if args.csv:
        write_text(csv_text(rows, BOUND_FIELDS), args.csv)
    return 0


def cmd_penner(args):
    ob = read_openbook(args.file)
    S = ob.surface
    g1 = parse_items(S, args.gamma1) or []
    g2 = parse_items(S, args.gamma2) or []
    cert = penner_certificate(ob, g1, g2)
    write_text(dumps(penner_to_json(S, cert)), args.out)
    return 0


# -- batch ---------------------------------------------------------------------------------

SUMMARY_FIELDS = ['name', 'boundary_count'] + list(PROPERTIES) + ['fdtc']


def load_manifest(path):
    with open(path) as fh:
        try:
            m = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError('%s line %d' % (path, e.lineno), e.msg)
    base = os.path.dirname(os.path.abspath(path))
    entries = m.get('inputs') if isinstance(m, dict) else m
    if not isinstance(entries, list):
        raise ParseError(path, "manifest needs a list of inputs")
    config = m.get('config', {}) if isinstance(m, dict) else {}
    jobs = []
    names = set()
    for k, e in enumerate(entries):
        where = '%s inputs[%d]' % (path, k)
        if not isinstance(e, dict) or 'name' not in e:
            raise ParseError(where, "each input needs a name")
        name = str(e['name'])
        if name in names or os.sep in name:
            raise ParseError(where, "names must be unique file names")
        names.add(name)
        if 'family' in e:
            ob = build_family(tuple(e['family']))
        elif 'openbook' in e:
            ob = openbook_from_json(e['openbook'])
        elif 'document' in e:
            with open(os.path.join(base, e['document'])) as fh:
                ob = parse_openbook(fh.read())
        else:
            raise ParseError(where, "expected family, openbook or document")
        for step in e.get('construct', []):
            ob = build_construction(ob, ConstructionParams(step['boundary'], tuple(step['n'])))
        jobs.append((name, openbook_to_json(ob), e.get('hints', {})))
    return jobs, config


def _hints_from_dict(S, d, config):
    def items(key):
        val = d.get(key)
        return None if val is None else tuple(parse_item(S, t) for t in val)
    targets = d.get('cap_targets')
    return Hints(
        gamma1=items('gamma1'), gamma2=items('gamma2'),
        reducing_curves=items('reducing') or (),
        cap_targets=None if targets is None else tuple(tuple(t) for t in targets),
        depth=config.get('depth', 4), cap_depth=config.get('cap_depth'),
        subset_limit=config.get('subset_limit', 3))


def _run_job(job):
    name, doc, hints, config = job
    ob = openbook_from_json(doc)
    rep, cert = analyze_book(ob, _hints_from_dict(ob.surface, hints, config))
    return name, rep, bound_rows(name, ob, cert.bounds)


def summary_row(name, rep, rows):
    verdicts = rep['certificate']['verdicts']
    row = {'name': name, 'boundary_count': rep['input']['boundary_count']}
    for p in PROPERTIES:
        row[p] = verdicts[p]['status']
    row['fdtc'] = ' '.join('B%d:%s%s' % (r['boundary'], '>=' if r['kind'] == 'lower_bound' else '',
                                         r['value'] if r['value'] != '' else '?') for r in rows)
    return row


def cmd_batch(args):
    jobs, config = load_manifest(args.manifest)
    out_dir = args.out_dir or os.environ.get(OUT_DIR_ENV) or 'planarbook-out'
    os.makedirs(out_dir, exist_ok=True)
    work = [(n, d, h, config) for n, d, h in jobs]
    if args.workers > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as ex:
            results = list(ex.map(_run_job, work))
    else:
        results = [_run_job(j) for j in work]
    summary, all_rows = [], []
    for name, rep, rows in results:
        write_text(dumps(rep), os.path.join(out_dir, name + '.report.json'))
        summary.append(summary_row(name, rep, rows))
        all_rows.extend(rows)
    write_text(csv_text(summary, SUMMARY_FIELDS), os.path.join(out_dir, 'summary.csv'))
    write_text(csv_text(all_rows, BOUND_FIELDS), os.path.join(out_dir, 'fdtc.csv'))
    if not args.no_figures:
        from .plotting import plot_bounds
        plot_bounds(_plot_rows(all_rows), os.path.join(out_dir, 'fdtc.png'),
                    title='coefficient per boundary')
    sys.stdout.write(csv_text(summary, SUMMARY_FIELDS))
    return 0


# -- entry point ---------------------------------------------------------------------------

def _add_search_flags(p):
    p.add_argument('--depth', type=int, default=4, help='arc length bound for veering search')
    p.add_argument('--cap-depth', type=int, default=None,
                   help='arc length bound after capping (default: --depth)')
    p.add_argument('--subset-limit', type=int, default=3, help='largest cap-off subset tried')


def build_parser():
    parser = argparse.ArgumentParser(prog='planarbook',
                                     description='Open books on planar surfaces.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', help='classify an open book')
    p.add_argument('file', nargs='?', default='-')
    p.add_argument('--out')
    p.add_argument('--csv', help='also write the coefficient table here')
    p.add_argument('--figure', help='also plot the coefficient table here')
    p.add_argument('--gamma1', help='positive twist curves for the pseudo-Anosov check')
    p.add_argument('--gamma2', help='negative twist curves for the pseudo-Anosov check')
    p.add_argument('--reducing', help='candidate reducing curves')
    p.add_argument('--cap-targets', help='label subsets to cap, e.g. "2;3,4"')
    _add_search_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('construct', help='replace a boundary by m new ones')
    p.add_argument('file', nargs='?', default='-')
    p.add_argument('--boundary', type=int, required=True)
    p.add_argument('--n', type=int_list, required=True)
    p.add_argument('--out')
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser('family', help='the four-holed sphere family')
    p.add_argument('--v', type=int_list, required=True)
    p.add_argument('--out')
    p.set_defaults(func=cmd_family)

    p = sub.add_parser('cap-off', help='glue a disc to one boundary')
    p.add_argument('file', nargs='?', default='-')
    p.add_argument('--boundary', type=int, required=True)
    p.add_argument('--out')
    p.set_defaults(func=cmd_cap_off)

    p = sub.add_parser('intersect', help='geometric intersection number')
    p.add_argument('file', nargs='?', default='-')
    p.add_argument('--a', required=True)
    p.add_argument('--b', required=True)
    p.add_argument('--out')
    p.add_argument('--figure', help='also draw the two items in the cut-open polygon')
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser('fdtc', help='coefficient table')
    p.add_argument('file', nargs='?', default='-')
    p.add_argument('--boundary', type=int)
    p.add_argument('--depth', type=int, default=4)
    p.add_argument('--out')
    p.add_argument('--csv')
    p.set_defaults(func=cmd_fdtc)

    p = sub.add_parser('penner', help='pseudo-Anosov certificate from filling twist curves')
    p.add_argument('file', nargs='?', default='-')
    p.add_argument('--gamma1', default='')
    p.add_argument('--gamma2', default='')
    p.add_argument('--out')
    p.set_defaults(func=cmd_penner)

    p = sub.add_parser('batch', help='analyze many open books')
    p.add_argument('manifest')
    p.add_argument('--out-dir', help='default: $%s or ./planarbook-out' % OUT_DIR_ENV)
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--no-figures', action='store_true')
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidArgument, InvalidCurve) as e:
        sys.stderr.write('planarbook: error: %s\n' % e)
        return 2
    except OSError as e:
        sys.stderr.write('planarbook: error: %s\n' % e)
        return 2


if __name__ == '__main__':
    sys.exit(main())
