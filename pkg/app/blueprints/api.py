"""
API blueprint - read-only JSON endpoints mirroring the command line.
"""
from flask import Blueprint, Response, current_app, jsonify, request
import logging

from app.catalog import classify_xx
from app.certificates import build_certificate, export
from app.dsrg_verify import feasible_params
from app.errors import InvalidSpec, OutOfRange
from app.models import DihedrantSpec
from app.residue_multiset import ResidueMultiset
from app.spectrum import fourier
from app.utils import parse_residues
from config import Config

logger = logging.getLogger(__name__)

api = Blueprint('api', __name__)

MAX_N = 64


def require_int(name):
    """Integer query parameter or a 400."""
    value = request.args.get(name, type=int)
    if value is None:
        raise InvalidSpec(f'query parameter {name!r} must be an integer')
    return value


def require_range(name, value, low, high=MAX_N):
    if not low <= value <= high:
        raise OutOfRange(f'{name} must lie in {low}..{high}, got {value}')
    return value


def spec_from_args():
    n = require_range('n', require_int('n'), 1)
    return DihedrantSpec(n, parse_residues(request.args.get('x', ''), n),
                         parse_residues(request.args.get('y', ''), n))


# ==================== Service ====================

@api.route('/health', methods=['GET'])
def health():
    """Liveness check."""
    return jsonify({'status': 'ok', 'version': current_app.config.get('VERSION')})


# ==================== Verification ====================

@api.route('/verify', methods=['GET'])
def verify():
    """Certificate for Dih(n, X, Y); 422 with a witness when it is not a DSRG."""
    spec = spec_from_args()
    certificate = build_certificate(spec)
    logger.debug('Verified %s as %s', spec.to_dict(), certificate.params)
    return jsonify(certificate.to_dict())


@api.route('/export', methods=['GET'])
def export_graph():
    spec = spec_from_args()
    fmt = request.args.get('format', 'dot')
    document = export(spec, fmt)
    if fmt == 'dot':
        return Response(document + '\n', mimetype='text/vnd.graphviz')
    return jsonify(document)


# ==================== Catalog ====================

@api.route('/classify/<int:n>', methods=['GET'])
def classify(n):
    require_range('n', n, 3, Config.DSRG_MAX_CLASSIFY_N)
    return jsonify([entry.to_dict() for entry in classify_xx(n)])


@api.route('/feasible/<int:vertices>', methods=['GET'])
def feasible(vertices):
    require_range('N', vertices, 2)
    return jsonify([params.to_dict() for params in feasible_params(vertices)])


@api.route('/spectrum', methods=['GET'])
def spectrum():
    """Spectrum rows of a residue multiset given with repeats."""
    n = require_range('n', require_int('n'), 1)
    residues = parse_residues(request.args.get('set', ''), n, allow_repeats=True)
    return jsonify(fourier(ResidueMultiset.from_elements(n, residues)).to_dict())
