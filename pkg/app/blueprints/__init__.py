"""
Blueprints package - register all Flask blueprints.
"""
from app.blueprints.api import api


def register_blueprints(app):
    """Register all blueprints with the Flask app."""
    # Read-only JSON API
    app.register_blueprint(api, url_prefix='/api/v1')
