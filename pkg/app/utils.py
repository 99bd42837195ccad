"""
Utility functions for parsing residue lists, number theory helpers and parallel sweeps
"""
import logging
import re
from concurrent.futures import ProcessPoolExecutor

from sympy import divisors as _sympy_divisors

from app.errors import InvalidSpec, NotADivisor

logger = logging.getLogger(__name__)

_RESIDUE_LIST = re.compile(r'^\s*-?\d+(\s*,\s*-?\d+)*\s*$')


def parse_residues(text, n=None, allow_repeats=False):
    """
    Parse a comma-separated residue list such as "1,2,2,3".
    - "" and "-" mean the empty list
    - residues are reduced mod n when n is given
    - repeats are rejected unless allow_repeats (multisets)
    """
    if text is None:
        return ()
    text = str(text).strip()
    if text in ('', '-'):
        return ()
    if not _RESIDUE_LIST.match(text):
        raise InvalidSpec(f'Malformed residue list: {text!r}')

    values = [int(part) for part in text.split(',')]
    if n is not None:
        values = [v % n for v in values]
    if not allow_repeats and len(set(values)) != len(values):
        raise InvalidSpec(f'Residue list has repeats: {text!r}')
    return tuple(values)


def format_residues(values):
    """Inverse of parse_residues; the empty list prints as "-"."""
    values = list(values)
    if not values:
        return '-'
    return ','.join(str(v) for v in values)


def divisors(n):
    """Positive divisors of n in ascending order."""
    return list(_sympy_divisors(n))


def require_divisor(n, v):
    if v <= 0 or n % v:
        raise NotADivisor(n, v)


def parallel_map(func, items, threads=1, chunksize=1):
    """
    Ordered map over items, optionally fanned out to a process pool.
    Results come back in input order whatever the worker count.
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug('Fanning out %d tasks to %d workers', len(items), threads)
    with ProcessPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
