import logging

from flask import Flask, jsonify

from app.errors import DsrgError
from config import Config

logger = logging.getLogger(__name__)


def create_app(config_class=Config):
    app = Flask(__name__)
    app.config.from_object(config_class)
    app.json.sort_keys = False

    logging.basicConfig(level=app.config.get('DSRG_LOG_LEVEL', 'WARNING'))

    from app.blueprints import register_blueprints
    register_blueprints(app)

    from app.cli import cli
    app.cli.add_command(cli, name='dsrg')

    # Error handlers
    @app.errorhandler(DsrgError)
    def dsrg_error(error):
        if error.status >= 500:
            logger.error('Internal inconsistency: %s', error.message)
        return jsonify(error.to_dict()), error.status

    @app.errorhandler(404)
    def not_found_error(error):
        return jsonify({'error': 'Not found', 'code': 'not_found'}), 404

    return app
