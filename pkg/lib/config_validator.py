"""
Config validation - Warns about engine settings that cannot work

Checks the merged configuration (config.yaml + config.local.yaml) and logs
each problem as a warning. Nothing here aborts: the CLI still runs and the
component that hits the bad value raises its own error.
"""

import logging

logger = logging.getLogger(__name__)

CAPACITY_KEYS = [
    'max_generators',
    'dense_lcm_table',
    'full_enumeration',
    'oracle_generators',
    'yuzvinsky_generators',
    'lcm_lattice',
    'ek_subsets',
]

OUTPUT_FORMATS = ('text', 'json')


def get_all_keys(obj, prefix=''):
    """
    Recursively get all keys from nested dict

    Args:
        obj: Dictionary to extract keys from
        prefix: Current path prefix (for nested keys)

    Returns:
        Set of dot-separated key paths (e.g., {'field.prime', 'search.seed'})
    """
    keys = set()

    if isinstance(obj, dict):
        for key, value in obj.items():
            full_key = f"{prefix}.{key}" if prefix else key
            keys.add(full_key)
            keys.update(get_all_keys(value, full_key))

    return keys


def is_prime(p):
    """Trial-division primality test (moduli stay below 2^31)."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def validate_config(cfg):
    """
    Check engine settings for values no component can use

    Args:
        cfg: Merged configuration dict

    Returns:
        List of warning dicts with 'key', 'message', 'suggestion'
    """
    warnings = []

    field = cfg.get('field') or {}
    prime = field.get('prime', 32003)
    if not is_prime(prime) or prime >= 2 ** 31:
        warnings.append({
            'key': 'field.prime',
            'message': f"field.prime={prime!r} is not a prime below 2^31",
            'suggestion': "Use a prime such as 2, 3 or 32003",
        })

    capacity = cfg.get('capacity') or {}
    for name in CAPACITY_KEYS:
        if name not in capacity:
            continue
        value = capacity[name]
        if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
            warnings.append({
                'key': f'capacity.{name}',
                'message': f"capacity.{name}={value!r} must be a positive integer",
                'suggestion': "Remove the override to use the default",
            })

    max_gens = capacity.get('max_generators', 63)
    if isinstance(max_gens, int) and max_gens > 63:
        warnings.append({
            'key': 'capacity.max_generators',
            'message': f"capacity.max_generators={max_gens} exceeds the 63-bit symbol width",
            'suggestion': "Set it to 63 or lower",
        })

    search = cfg.get('search') or {}
    threads = search.get('threads', 1)
    if not isinstance(threads, int) or threads < 1:
        warnings.append({
            'key': 'search.threads',
            'message': f"search.threads={threads!r} must be at least 1",
            'suggestion': "Use 1 for a single-process search",
        })
    for name in ('budget_orders', 'budget_seconds'):
        value = search.get(name)
        if value is not None and (not isinstance(value, (int, float)) or value <= 0):
            warnings.append({
                'key': f'search.{name}',
                'message': f"search.{name}={value!r} must be positive or null",
                'suggestion': "Use null for an unlimited budget",
            })

    output = cfg.get('output') or {}
    fmt = output.get('format', 'text')
    if fmt not in OUTPUT_FORMATS:
        warnings.append({
            'key': 'output.format',
            'message': f"output.format={fmt!r} is not one of {', '.join(OUTPUT_FORMATS)}",
            'suggestion': "Reports fall back to text",
        })

    return warnings


def find_obsolete_keys(base_config, local_config):
    """Keys in config.local.yaml that config.yaml no longer defines."""
    if not local_config:
        return set()
    return get_all_keys(local_config) - get_all_keys(base_config)


def log_config_warnings(cfg, local_config=None):
    """
    Log warnings about unusable settings

    Args:
        cfg: Merged configuration dict
        local_config: Raw local overrides dict (or None)
    """
    warnings = validate_config(cfg)

    if warnings:
        logger.warning(f"Config validation: {len(warnings)} problem(s) found:")
        for w in warnings[:5]:
            logger.warning(f"  - {w['key']}: {w['message']} ({w['suggestion']})")
        if len(warnings) > 5:
            logger.warning(f"  ... and {len(warnings) - 5} more")

    obsolete = find_obsolete_keys(cfg, local_config)
    if obsolete:
        logger.info(f"Config info: {len(obsolete)} unknown key(s) in config.local.yaml")
        for key in sorted(obsolete)[:3]:
            logger.info(f"  - {key}: has no effect and can be removed")
