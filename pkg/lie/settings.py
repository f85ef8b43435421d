"""
Settings lookup for guards and logging.

Every size limit the library enforces is read here, from environment
variables, so a shell (or CI job) can raise a limit without code changes.
Command-line flags are applied on top through ``load_guards(**overrides)``.
"""
import os
from typing import NamedTuple, Optional

from .errors import DomainError

ENV_PREFIX = "RHO_TENSOR_"

# dim V(rho) for F4; the dimension guard is raised to this when large types are allowed
LARGE_MAX_DIM = 2 ** 24


def get_setting(key, default=None):
    """
    Get a setting from the environment.

    Args:
        key: Name without the ``RHO_TENSOR_`` prefix (e.g. ``MAX_DIM``)
        default: Value returned when the variable is unset or empty

    Returns:
        The raw string value or the default
    """
    value = os.getenv(ENV_PREFIX + key)
    if value is None or value.strip() == "":
        return default
    return value.strip()


def _int_setting(key: str, default: int) -> int:
    raw = get_setting(key)
    if raw is None:
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        raise DomainError(f"{ENV_PREFIX}{key} must be an integer, got {raw!r}")


def _bool_setting(key: str, default: bool) -> bool:
    raw = get_setting(key)
    if raw is None:
        return default
    return raw.lower() in ("1", "true", "yes", "on")


class Guards(NamedTuple):
    """Size limits for the exponential parts of the computation."""
    max_orbit: int = 10 ** 7
    max_dim: int = 10 ** 7
    max_product_dim: int = 10 ** 6
    max_rank: int = 20
    max_weyl_order: int = 1152
    max_subset_roots: int = 24
    max_positive_roots: int = 16
    allow_large: bool = False


def load_guards(**overrides) -> Guards:
    """
    Guards from the environment; explicit non-None overrides win.

    allow_large also lifts the dimension guard to LARGE_MAX_DIM unless a
    dimension limit was given explicitly.
    """
    defaults = Guards()
    guards = Guards(
        max_orbit=_int_setting("MAX_ORBIT", defaults.max_orbit),
        max_dim=_int_setting("MAX_DIM", defaults.max_dim),
        max_product_dim=_int_setting("MAX_PRODUCT_DIM", defaults.max_product_dim),
        max_rank=_int_setting("MAX_RANK", defaults.max_rank),
        max_weyl_order=_int_setting("MAX_WEYL_ORDER", defaults.max_weyl_order),
        max_subset_roots=_int_setting("MAX_SUBSET_ROOTS", defaults.max_subset_roots),
        max_positive_roots=_int_setting("MAX_POSITIVE_ROOTS", defaults.max_positive_roots),
        allow_large=_bool_setting("ALLOW_LARGE", defaults.allow_large),
    )
    updates = {key: value for key, value in overrides.items() if value is not None}
    unknown = set(updates) - set(Guards._fields)
    if unknown:
        raise TypeError(f"Unknown guard(s): {', '.join(sorted(unknown))}")
    guards = guards._replace(**updates)
    max_dim_set = "max_dim" in updates or get_setting("MAX_DIM") is not None
    if guards.allow_large and not max_dim_set:
        guards = guards._replace(max_dim=max(guards.max_dim, LARGE_MAX_DIM))
    return guards


def resolve_guards(guards: Optional[Guards]) -> Guards:
    return guards if guards is not None else load_guards()


def log_level() -> str:
    return (get_setting("LOG_LEVEL", "WARNING") or "WARNING").upper()
