"""App-level access to the MONOIDS settings block"""
from django.conf import settings

DEFAULTS = {
    'CLOSURE_RETAIN_CAP': 2 ** 20,
    'CLOSURE_BATCH': 65536,
    'DENSE_SEEN_LIMIT': 2 ** 25,
    'SEARCH_MAX_ORDER': 150,
    'SEARCH_MAX_CLOSURES': 2_000_000,
    'WREATH_ATTEMPTS': 2000,
    'SEED': 0,
}


def monoid_setting(name):
    """Return a MONOIDS setting, falling back to the packaged default"""
    if name not in DEFAULTS:
        raise KeyError(f'Unknown monoids setting: {name}')
    overrides = getattr(settings, 'MONOIDS', {}) or {}
    return overrides.get(name, DEFAULTS[name])
