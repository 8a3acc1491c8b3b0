from django.conf import settings

DEFAULTS = {
    "MAX_ORDER": 10,
    "BRUTE_FORCE_MAX_ORDER": 7,
    "ADJUGATE_MAX_ORDER": 8,
    "DIGITS": 5,
    "SEED": 0,
    "TRIALS": 50,
    "ENTRY_RANGE": 9,
}


def get_setting(name):
    """
    Read a toolkit setting from ``settings.ASSRKIT``, falling back to the default.
    """
    return getattr(settings, "ASSRKIT", {}).get(name, DEFAULTS[name])


def resolve(name, override):
    return get_setting(name) if override is None else override
