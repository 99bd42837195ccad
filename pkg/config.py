import os

from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(basedir, '.env'))


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value not in (None, '') else default


class Config:
    DSRG_THREADS = _env_int('DSRG_THREADS', 1)
    DSRG_LOG_LEVEL = os.environ.get('DSRG_LOG_LEVEL', 'WARNING').upper()
    DSRG_MAX_BRUTE_N = _env_int('DSRG_MAX_BRUTE_N', 16)
    DSRG_MAX_BRUTE_XY_N = _env_int('DSRG_MAX_BRUTE_XY_N', 8)
    DSRG_MAX_CLASSIFY_N = _env_int('DSRG_MAX_CLASSIFY_N', 32)
    JSON_SORT_KEYS = False
    VERSION = '1.0.0'

    @staticmethod
    def spectral_tolerance(n):
        """Snapping tolerance for modulus n; DSRG_TOLERANCE overrides 1e-6 * n."""
        override = os.environ.get('DSRG_TOLERANCE')
        if override:
            return float(override)
        return 1e-6 * max(n, 1)
