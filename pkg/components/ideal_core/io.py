"""
Ideal file formats

Text format:
    # comment
    vars: x y z w
    x*w
    x*y

JSON format:
    {"vars": ["x", "y", "z", "w"], "gens": [[1, 0, 0, 1], [1, 1, 0, 0]]}

Generator listing order defines indices 0..n-1.
"""

import json
import logging
from pathlib import Path

from lib.errors import InputError
from .monomials import (
    Monomial, MonomialIdeal, RingContext, format_monomial, minimize_generators, parse_monomial,
)

logger = logging.getLogger(__name__)


def parse_ideal_text(text: str) -> MonomialIdeal:
    """
    Parse the text ideal format

    Raises:
        InputError: missing or repeated vars line, bad monomials, no generators
    """
    ctx = None
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if stripped.startswith('vars:'):
            if ctx is not None:
                raise InputError(f"line {lineno}: second 'vars:' line")
            ctx = RingContext.from_names(stripped[len('vars:'):])
            continue
        if ctx is None:
            raise InputError(f"line {lineno}: monomial before the 'vars:' line")
        try:
            raw.append(parse_monomial(stripped, ctx))
        except InputError as e:
            raise InputError(f"line {lineno}: {e}") from None
    if ctx is None:
        raise InputError("Missing 'vars:' line")
    if not raw:
        raise InputError("Ideal file lists no generators")
    return _checked(raw)


def parse_ideal_json(data) -> MonomialIdeal:
    """Parse the JSON ideal format (a dict or a JSON string)"""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise InputError(f"Invalid JSON: {e}") from None
    if not isinstance(data, dict) or 'vars' not in data or 'gens' not in data:
        raise InputError("JSON ideal needs keys 'vars' and 'gens'")
    ctx = RingContext.from_names(data['vars'])
    raw = []
    for row in data['gens']:
        if not isinstance(row, list) or not all(isinstance(e, int) for e in row):
            raise InputError(f"Generator {row!r} is not an integer exponent array")
        raw.append(Monomial(tuple(row), ctx))
    if not raw:
        raise InputError("JSON ideal lists no generators")
    return _checked(raw)


def _checked(raw):
    ideal = minimize_generators(raw)
    if ideal.n != len(raw):
        # Indices would shift silently otherwise
        logger.warning(
            f"Input listed {len(raw)} monomials, {ideal.n} are minimal generators; "
            f"indices refer to the minimized list"
        )
    return ideal


def load_ideal(path) -> MonomialIdeal:
    """Load an ideal from a .json file or a text file"""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}") from None
    if path.suffix == '.json' or text.lstrip().startswith('{'):
        return parse_ideal_json(text)
    return parse_ideal_text(text)


def ideal_to_text(I: MonomialIdeal) -> str:
    lines = ['vars: ' + ' '.join(I.ctx.var_names)]
    lines.extend(format_monomial(g) for g in I.gens)
    return '\n'.join(lines) + '\n'


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {'vars': list(I.ctx.var_names), 'gens': [list(g.exponents) for g in I.gens]}
