from dotenv import load_dotenv
load_dotenv()

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field, replace
from typing import Optional

from werkzeug.datastructures import MultiDict

from forms import FORMS
from triangle_moduli.config import configure, get_tolerances, log_level_from_env, tolerances_from_env
from triangle_moduli.elliptic_map import EdgeChoice, construct_curve, fiber_in_T, p_section
from triangle_moduli.exceptions import (
    ConfigurationError,
    DomainError,
    MalformedLiteral,
    UsageError,
)
from triangle_moduli.geometry import (
    LabeledTriangle,
    TriangleClass,
    angles_of,
    classify_triangle,
    format_complex,
    is_complex_literal,
    normalize_labeled,
)
from triangle_moduli.modular_group import (
    act,
    canonicalize_gl2z,
    equivalent_gl2z,
    equivalent_sl2z,
    format_matrix,
    parse_matrix,
    reduce_sl2z,
)
from triangle_moduli.s3_action import canonical_acute, region_of, s3_orbit, stabilizer
from triangle_moduli.svg_renderer import render_svg, write_svg
from triangle_moduli.tiling import Viewport, enumerate_tiles


@dataclass
class CommandRequest:
    """A subcommand with arguments that already passed form validation."""

    subcommand: str
    arguments: dict = field(default_factory=dict)
    tolerance: Optional[float] = None

    def __post_init__(self):
        if self.subcommand not in FORMS:
            raise UsageError(f"Unknown subcommand {self.subcommand!r}")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _ArgumentParser(
        prog='triangle-moduli',
        description='Moduli of acute triangles, the modular group and elliptic curves.',
    )
    parser.add_argument('--tolerance', type=float, help='Override the classification and equality tolerances')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    for name, help_text in (
        ('classify', 'Classify a triangle as acute, right, obtuse or degenerate'),
        ('normalize', 'Map a labeled triangle to its point of H'),
        ('angles', 'Interior angles in radians'),
    ):
        sub = commands.add_parser(name, help=help_text)
        for vertex in ('v1', 'v2', 'v3'):
            sub.add_argument(vertex)

    curve = commands.add_parser('curve', help='Elliptic curve of a triangle doubled across an edge')
    for vertex in ('v1', 'v2', 'v3'):
        curve.add_argument(vertex)
    curve.add_argument('--edge', default='E12')
    curve.add_argument('--force-obtuse', action='store_true')

    for name, help_text in (
        ('orbit', 'S3 orbit and stabilizer of a point'),
        ('fiber', 'Points of T with the same elliptic curve'),
        ('section', 'A point of the closure of T over a curve class'),
        ('region', 'Which of the six regions of T contains a point'),
        ('canonical', 'Canonical acute representative of the S3 orbit'),
    ):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument('z', metavar='w' if name == 'section' else 'z')

    reduce = commands.add_parser('reduce', help='Reduce a point to the fundamental domain')
    reduce.add_argument('z')
    reduce.add_argument('--gl', action='store_true')

    equiv = commands.add_parser('equiv', help='Whether two points lie in one orbit')
    equiv.add_argument('z1')
    equiv.add_argument('z2')
    equiv.add_argument('--gl', action='store_true')

    act_parser = commands.add_parser('act', help='Apply a GL(2,Z) element to a point')
    act_parser.add_argument('matrix')
    act_parser.add_argument('z')

    render = commands.add_parser('render', help='Write the GL(2,Z) tessellation as SVG')
    render.add_argument('--depth', required=True)
    render.add_argument('--out', required=True)
    render.add_argument('--overlay-t', action='store_true')
    render.add_argument('--viewport')
    render.add_argument('--size')
    render.add_argument('--precision')
    return parser


def _offending(field):
    return f" {field.raw_data[0]!r}" if field.raw_data else ''


def parse_request(argv):
    """
    Turn command-line words into a validated CommandRequest.

    Raises:
        UsageError: Unknown flags, missing arguments or malformed literals
    """
    # argparse takes "-0.3+1.1i" for an option; a leading space keeps it positional
    argv = [f" {arg}" if arg.startswith('-') and is_complex_literal(arg) else arg for arg in argv]
    args = build_parser().parse_args(argv)
    values = vars(args)
    subcommand = values.pop('command')
    tolerance = values.pop('tolerance')
    if tolerance is not None and not tolerance > 0:
        raise UsageError(f"--tolerance must be positive, got {tolerance}")

    formdata = MultiDict()
    for key, value in values.items():
        if value is None or value is False:
            continue
        formdata.add(key, 'y' if value is True else str(value))
    form = FORMS[subcommand](formdata)
    if not form.validate():
        problems = '; '.join(
            f"{name}{_offending(form[name])}: {', '.join(messages)}" for name, messages in form.errors.items()
        )
        raise UsageError(problems)
    return CommandRequest(subcommand, dict(form.data), tolerance)


# ============================================================================
# HANDLERS
# ============================================================================

def _triangle(arguments):
    return LabeledTriangle(arguments['v1'], arguments['v2'], arguments['v3'])


def _classify(arguments):
    tri = _triangle(arguments)
    kind = classify_triangle(tri)
    moduli = None if kind is TriangleClass.DEGENERATE else format_complex(normalize_labeled(tri)[0])
    return {'class': kind.value, 'moduli': moduli}


def _normalize(arguments):
    point, reflected = normalize_labeled(_triangle(arguments))
    return {'moduli': format_complex(point), 'reflected': reflected}


def _angles(arguments):
    alpha, beta, gamma = angles_of(_triangle(arguments))
    return {'alpha': alpha, 'beta': beta, 'gamma': gamma}


def _curve(arguments):
    construction = construct_curve(
        _triangle(arguments), EdgeChoice[arguments['edge']], force=arguments['force_obtuse']
    )
    basis = construction.doubled.basis
    return {
        'basis': [format_complex(basis.w1), format_complex(basis.w2)],
        'edge': construction.doubled.edge.name,
        'modulus': format_complex(construction.modulus),
        'parallelogram': [format_complex(q) for q in construction.doubled.parallelogram.vertices],
        'tau': format_complex(construction.tau),
        'witness': format_matrix(construction.witness),
    }


def _orbit(arguments):
    z = arguments['z']
    return {
        'orbit': [format_complex(w) for w in s3_orbit(z)],
        'stabilizer': [str(sigma) for sigma in stabilizer(z)],
    }


def _fiber(arguments):
    return {'fiber': [format_complex(w) for w in fiber_in_T(arguments['z'])]}


def _section(arguments):
    return {'point': format_complex(p_section(arguments['z']))}


def _region(arguments):
    region = region_of(arguments['z'])
    return {'color': region.color.value, 'ordering': str(region.ordering), 'sides': region.describe()}


def _canonical(arguments):
    return {'point': format_complex(canonical_acute(arguments['z']))}


def _reduce(arguments):
    reducer = canonicalize_gl2z if arguments['gl'] else reduce_sl2z
    point, witness = reducer(arguments['z'])
    return {'point': format_complex(point), 'witness': format_matrix(witness)}


def _equiv(arguments):
    compare = equivalent_gl2z if arguments['gl'] else equivalent_sl2z
    return {'equivalent': compare(arguments['z1'], arguments['z2'])}


def _act(arguments):
    g = parse_matrix(arguments['matrix'])
    return {'point': format_complex(act(g, arguments['z']))}


def _render(arguments):
    vp = Viewport()
    if arguments['viewport'] is not None:
        x_min, x_max, y_min, y_max = arguments['viewport']
        vp = replace(vp, x_min=x_min, x_max=x_max, y_min=y_min, y_max=y_max)
    if arguments['size'] is not None:
        width, height = arguments['size']
        vp = replace(vp, width_px=width, height_px=height)
    if arguments['precision'] is not None:
        vp = replace(vp, precision=arguments['precision'])
    tiles = enumerate_tiles(arguments['depth'], vp)
    document = render_svg(tiles, vp, overlay_T=arguments['overlay_t'])
    path = write_svg(arguments['out'], document)
    return {'depth': arguments['depth'], 'out': str(path), 'tiles': len(tiles)}


HANDLERS = {
    'classify': _classify,
    'normalize': _normalize,
    'angles': _angles,
    'curve': _curve,
    'orbit': _orbit,
    'fiber': _fiber,
    'section': _section,
    'region': _region,
    'canonical': _canonical,
    'reduce': _reduce,
    'equiv': _equiv,
    'act': _act,
    'render': _render,
}


def _dumps(payload):
    return json.dumps(payload, sort_keys=True, separators=(',', ':'))


def _error_json(error, category):
    return _dumps({'code': error.code, 'error': category, 'message': str(error)})


def run(request):
    """
    Execute one validated request.

    Returns:
        tuple: (exit code, standard output text, standard error text); 0 on
        success, 1 for domain errors, 2 for usage errors
    """
    previous = get_tolerances()
    if request.tolerance is not None:
        configure(previous.with_tolerance(request.tolerance))
    try:
        payload = HANDLERS[request.subcommand](request.arguments)
    except DomainError as e:
        logging.error(f"{request.subcommand} failed: {e}")
        return 1, '', _error_json(e, 'DomainError')
    except MalformedLiteral as e:
        return 2, '', _error_json(e, 'UsageError')
    except OSError as e:
        logging.error(f"Could not write output: {e}")
        return 1, '', _dumps({'code': 'OutputError', 'error': 'OutputError', 'message': str(e)})
    finally:
        configure(previous)
    return 0, _dumps(payload), ''


def execute(argv):
    """Parse and run a command line, returning (exit code, stdout text, stderr text)."""
    try:
        request = parse_request(argv)
    except (UsageError, MalformedLiteral) as e:
        return 2, '', _error_json(e, 'UsageError')
    return run(request)


def main(argv=None):
    try:
        logging.basicConfig(level=log_level_from_env(), format='%(levelname)s %(name)s: %(message)s')
        configure(tolerances_from_env())
    except ConfigurationError as e:
        print(_error_json(e, 'ConfigurationError'), file=sys.stderr)
        return 2
    code, out, err = execute(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == '__main__':
    sys.exit(main())
