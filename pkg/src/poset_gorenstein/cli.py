'''Command line interface.

Subcommands: classify, member, locus, generate, oracle.  Reports are
emitted as canonical JSON (sorted keys, no whitespace) so identical runs
produce byte-identical output; --pretty switches to an indented rendering
and --timing adds wall-clock milliseconds (off by default, since timings
are not reproducible).
'''

import argparse
import hashlib
import json
import sys
import time

from . import locus as locus_mod
from . import membership, oracle
from .errors import (BoxTooLarge, CycleDetected, DomainMismatch,
                     DuplicateElement, EmptyPoset, InvalidFormat, NotAChain,
                     NotInG, NotInS0, NotInT0, NotMember, OutOfRange,
                     PosetError, PreconditionViolated, UnknownElement,
                     UnknownElementInCover)
from .points import point_from_dict, point_to_dict
from .posets import element_to_json, poset_from_dict, poset_to_dict

SCHEMA = 'poset-gorenstein-report/1'

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONE = 3
EXIT_RANGE = 4
EXIT_INTERNAL = 5

_PARSE_ERRORS = (InvalidFormat, DuplicateElement, UnknownElementInCover,
                 CycleDetected, NotAChain, UnknownElement, DomainMismatch,
                 EmptyPoset, json.JSONDecodeError, OSError)
_CONE_ERRORS = (NotInS0, NotInT0, NotInG, NotMember)
_RANGE_ERRORS = (OutOfRange, BoxTooLarge)


def _sha256(path):
    digest = hashlib.sha256()
    with open(path, 'rb') as handle:
        digest.update(handle.read())
    return digest.hexdigest()


def _load_poset(path):
    with open(path) as handle:
        data = json.load(handle)
    return poset_from_dict(data)


def _load_point(path, poset):
    with open(path) as handle:
        data = json.load(handle)
    return point_from_dict(data, poset)


def _el(x):
    return element_to_json(x)


def _els(xs):
    return [element_to_json(x) for x in xs]


def _witness_json(witness):
    if witness is None:
        return None
    if isinstance(witness, membership.ChainWitness):
        if witness.kind == 'non_pure_star':
            return {'kind': 'non_pure_star', 'chains': [_els(c) for c in witness.chains]}
        return {'kind': 'bad_cycle',
                'chains': {'lower': [_els(c) for c in witness.lower],
                           'upper': [_els(c) for c in witness.upper]}}
    return {'kind': 'order_cycle',
            'sequence': {'a': _els(witness.a), 'b': _els(witness.b)}}


def _certificate_json(cert):
    return {'kind': 'certificate', 'ring': cert.ring, 'exponent': cert.N,
            'eta': point_to_dict(cert.eta), 'zeta': point_to_dict(cert.zeta)}


def _label_json(poset, label):
    if label.kind == 'chain_star':
        data = {'chain': _els(label.data)}
    elif label.kind == 'chain_cycle':
        lower, upper = label.data
        data = {'lower': [_els(c) for c in lower], 'upper': [_els(c) for c in upper]}
    else:
        data = {'sequence': {'a': _els(label.data.a), 'b': _els(label.data.b)}}
    return {'kind': label.kind, 'data': data, 'coheight': label.coheight,
            'face_dimension': locus_mod.face_dimension(poset, label)}


def _pretty(obj, indent=0):
    pad = '  ' * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val:
                lines.append('%s%s:' % (pad, key))
                lines.append(_pretty(val, indent + 1))
            else:
                lines.append('%s%s: %s' % (pad, key, json.dumps(val, sort_keys=True)))
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)) and val:
                lines.append('%s-' % pad)
                lines.append(_pretty(val, indent + 1))
            else:
                lines.append('%s- %s' % (pad, json.dumps(val, sort_keys=True)))
    else:
        lines.append('%s%s' % (pad, json.dumps(obj, sort_keys=True)))
    return '\n'.join(lines)


def _emit(args, inputs, result, started):
    report = {'schema': SCHEMA, 'command': args.command, 'argv': list(args.argv),
              'inputs': inputs, 'result': result}
    if getattr(args, 'timing', False):
        report['timing_ms'] = round((time.monotonic() - started) * 1000.0, 3)
    if getattr(args, 'pretty', False):
        print(_pretty(report))
    else:
        sys.stdout.write(json.dumps(report, sort_keys=True, separators=(',', ':')) + '\n')


def _cmd_classify(args, started):
    poset = _load_poset(args.poset)
    cls = membership.classify(poset)
    result = {'gorenstein': cls.gorenstein,
              'gorenstein_on_punctured_spectrum': cls.gorenstein_on_punctured_spectrum,
              'nearly_gorenstein': cls.nearly_gorenstein,
              'component_ranks': list(cls.component_ranks)}
    _emit(args, {'poset': _sha256(args.poset)}, result, started)
    return EXIT_OK


def _cmd_member(args, started):
    poset = _load_poset(args.poset)
    point = _load_point(args.point, poset)
    result_obj = membership.member(poset, point, args.ring)
    result = {'ring': args.ring, 'member': result_obj.member,
              'witness': _witness_json(result_obj.witness)}
    if args.certificate and result_obj.member:
        cert = membership.certificate(poset, point, args.ring)
        check = membership.verify_certificate(poset, point, cert)
        assert check.ok, 'emitted certificate failed verification: %s' % (check.reasons,)
        result['certificate'] = _certificate_json(cert)
    elif args.certificate:
        result['certificate'] = None
    _emit(args, {'poset': _sha256(args.poset), 'point': _sha256(args.point)},
          result, started)
    return EXIT_OK


def _cmd_locus(args, started):
    poset = _load_poset(args.poset)
    result = {}
    if args.ring in ('order', 'both'):
        entry = {'dimension': locus_mod.order_locus_dimension(poset)}
        if args.decompose:
            entry['labels'] = [_label_json(poset, lab)
                               for lab in locus_mod.order_radical_decomposition(poset)]
        result['order'] = entry
    if args.ring in ('chain', 'both'):
        entry = {'dimension': locus_mod.chain_locus_dimension(poset)}
        if args.decompose:
            entry['labels'] = [_label_json(poset, lab)
                               for lab in locus_mod.chain_radical_decomposition(poset)]
        result['chain'] = entry
    _emit(args, {'poset': _sha256(args.poset)}, result, started)
    return EXIT_OK


def _cmd_generate(args, started):
    poset = locus_mod.generate_poset(args.ring_dim, args.locus_dim)
    dim_order = locus_mod.order_locus_dimension(poset)
    dim_chain = locus_mod.chain_locus_dimension(poset)
    if dim_order != args.locus_dim or dim_chain != args.locus_dim:
        raise PreconditionViolated(
            'generated poset self-check failed: locus dims %d/%d, wanted %d'
            % (dim_order, dim_chain, args.locus_dim))
    if locus_mod.ring_dimension(poset) != args.ring_dim:
        raise PreconditionViolated('generated poset has the wrong ring dimension')
    data = poset_to_dict(poset)
    if args.output:
        with open(args.output, 'w') as handle:
            json.dump(data, handle, sort_keys=True, indent=2)
            handle.write('\n')
    result = {'poset': data, 'ring_dimension': args.ring_dim,
              'locus_dimension': args.locus_dim}
    _emit(args, {}, result, started)
    return EXIT_OK


def _cmd_oracle(args, started):
    poset = _load_poset(args.poset)
    inputs = {'poset': _sha256(args.poset)}
    if args.oracle_command == 'hilbert':
        result = {'check': 'hilbert', 'd_max': args.d_max,
                  'equal': oracle.hilbert_equal(poset, args.d_max)}
    elif args.oracle_command == 'lp-member':
        point = _load_point(args.point, poset)
        inputs['point'] = _sha256(args.point)
        member = oracle.verify(poset, 'member', ring=args.ring, point=point)
        result = {'check': 'lp-member', 'ring': args.ring, 'member': member}
    else:
        point = _load_point(args.point, poset)
        inputs['point'] = _sha256(args.point)
        cert = oracle.bounded_search_certificate(poset, point, args.ring,
                                                 n_max=args.n_max, box=args.box)
        result = {'check': 'search', 'ring': args.ring,
                  'certificate': None if cert is None else _certificate_json(cert)}
    _emit(args, inputs, result, started)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='poset-gorenstein',
        description='Gorenstein properties of the Ehrhart rings of the order '
                    'and chain polytopes of a finite poset.')
    parser.add_argument('--jobs', type=int, default=1,
                        help='worker cap accepted for forward compatibility; '
                             'all current checks run sequentially')
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p):
        p.add_argument('--pretty', action='store_true',
                       help='indented human-readable report')
        p.add_argument('--timing', action='store_true',
                       help='include wall clock milliseconds (breaks byte '
                            'reproducibility)')

    p = sub.add_parser('classify', help='decide the three Gorenstein properties')
    p.add_argument('poset', help='poset JSON file')
    common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser('member', help='radical-of-trace membership of a monomial')
    p.add_argument('poset')
    p.add_argument('point', help='lattice point JSON file')
    p.add_argument('--ring', choices=['order', 'chain'], required=True)
    p.add_argument('--certificate', action='store_true',
                   help='attach a verified split certificate for members')
    common(p)
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser('locus', help='dimension (and primes) of the non-Gorenstein locus')
    p.add_argument('poset')
    p.add_argument('--ring', choices=['order', 'chain', 'both'], default='both')
    p.add_argument('--decompose', action='store_true',
                   help='list the minimal defining primes')
    common(p)
    p.set_defaults(handler=_cmd_locus)

    p = sub.add_parser('generate',
                       help='poset with prescribed ring and locus dimensions')
    p.add_argument('ring_dim', type=int)
    p.add_argument('locus_dim', type=int)
    p.add_argument('-o', '--output', help='also write the poset JSON here')
    common(p)
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser('oracle', help='independent brute-force checks')
    osub = p.add_subparsers(dest='oracle_command', required=True)

    q = osub.add_parser('hilbert', help='compare lattice point counts degreewise')
    q.add_argument('poset')
    q.add_argument('--d-max', type=int, default=3)
    common(q)
    q.set_defaults(handler=_cmd_oracle)

    q = osub.add_parser('lp-member', help='membership via exact rational feasibility')
    q.add_argument('poset')
    q.add_argument('point')
    q.add_argument('--ring', choices=['order', 'chain'], required=True)
    common(q)
    q.set_defaults(handler=_cmd_oracle)

    q = osub.add_parser('search', help='bounded integer certificate search')
    q.add_argument('poset')
    q.add_argument('point')
    q.add_argument('--ring', choices=['order', 'chain'], required=True)
    q.add_argument('--n-max', type=int, default=6)
    q.add_argument('--box', type=int, default=8)
    common(q)
    q.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv=None):
    parser = build_parser()
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(raw)
    args.argv = raw
    if args.jobs < 1:
        parser.error('--jobs must be at least 1')
    started = time.monotonic()
    try:
        return args.handler(args, started)
    except _CONE_ERRORS as exc:
        print('error: %s' % (exc,), file=sys.stderr)
        return EXIT_CONE
    except _RANGE_ERRORS as exc:
        print('error: %s' % (exc,), file=sys.stderr)
        return EXIT_RANGE
    except _PARSE_ERRORS as exc:
        print('error: %s' % (exc,), file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionViolated, PosetError, AssertionError) as exc:
        print('internal error: %s' % (exc,), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == '__main__':
    sys.exit(main())
