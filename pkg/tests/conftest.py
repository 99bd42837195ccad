"""
Pytest configuration and fixtures for the dihedrant toolkit.
"""
import pytest
import os
import sys

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from click.testing import CliRunner

from app import create_app
from app.models import DihedrantSpec


class TestConfig:
    """Test configuration."""
    TESTING = True
    DSRG_THREADS = 1
    DSRG_LOG_LEVEL = 'WARNING'
    VERSION = 'test'


@pytest.fixture
def app():
    """Create and configure a test application instance."""
    app = create_app(TestConfig)
    with app.app_context():
        yield app


@pytest.fixture
def client(app):
    """Create a test client."""
    return app.test_client()


@pytest.fixture
def runner():
    """Click runner for the command line."""
    return CliRunner()


@pytest.fixture
def known_instances():
    """Dihedrants with hand-checked parameters (N, k, mu, lambda, t)."""
    return [
        (DihedrantSpec(3, (1,), (1,)), (6, 2, 1, 0, 1)),
        (DihedrantSpec(4, (1, 2), (1, 2)), (8, 4, 3, 1, 3)),
        (DihedrantSpec(6, (1, 2, 3), (1, 2, 3)), (12, 6, 4, 2, 4)),
        (DihedrantSpec(8, (1, 2, 5, 6), (1, 2, 5, 6)), (16, 8, 6, 2, 6)),
    ]
