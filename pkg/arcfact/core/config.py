"""
Settings for arcfact.
Search bounds, bound profiles and the chain-construction seed, read from the environment (.env supported).
"""

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace, asdict
from pathlib import Path
from typing import Dict, Iterator, Optional

from dotenv import load_dotenv

from .errors import InvalidArgumentError

load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parents[2]  # go up from arcfact/core
REPORTS_DIR = PROJECT_ROOT / "reports"

PROFILE_ENV = "ARCFACT_BOUNDS_PROFILE"
DEFAULT_PROFILE = "desk"


@dataclass(frozen=True)
class Settings:
    profile: str = DEFAULT_PROFILE
    elements: int = 10**6          # element enumeration (intersection, conjugacy, normalizers)
    subgroups: int = 2000          # |H| for full subgroup enumeration
    normal_subgroups: int = 10**5  # |H| for normal subgroup enumeration
    points: int = 10**5            # coset action degree
    arcs: int = 10**7              # s-arc counting
    iso_certify: int = 500         # below this order isomorphisms are certified by backtrack
    trial_division: int = 10**6
    seed: int = 0

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


BOUNDS_PROFILES: Dict[str, Settings] = {
    "desk": Settings(),
    "extended": Settings(
        profile="extended",
        elements=10**7,
        subgroups=10**4,
        normal_subgroups=10**6,
        points=10**6,
        arcs=10**8,
        iso_certify=5000,
        trial_division=10**7,
    ),
}

# env var -> settings field
_ENV_OVERRIDES = {
    "ARCFACT_BOUND_ELEMENTS": "elements",
    "ARCFACT_BOUND_SUBGROUPS": "subgroups",
    "ARCFACT_BOUND_POINTS": "points",
    "ARCFACT_SEED": "seed",
}


def load_settings(profile: Optional[str] = None) -> Settings:
    """
    Build settings from a named profile plus environment overrides.

    Args:
        profile: Profile name; defaults to $ARCFACT_BOUNDS_PROFILE or "desk"

    Returns:
        Settings instance
    """
    name = (profile or os.getenv(PROFILE_ENV) or DEFAULT_PROFILE).strip().lower()
    if name not in BOUNDS_PROFILES:
        raise InvalidArgumentError(
            f"unknown bounds profile {name!r}; expected one of {sorted(BOUNDS_PROFILES)}"
        )
    settings = BOUNDS_PROFILES[name]

    overrides = {}
    for env_name, field_name in _ENV_OVERRIDES.items():
        raw = os.getenv(env_name)
        if raw is None or not raw.strip():
            continue
        try:
            overrides[field_name] = int(raw)
        except ValueError:
            raise InvalidArgumentError(f"{env_name} must be an integer, got {raw!r}")
    return replace(settings, **overrides) if overrides else settings


_active: Optional[Settings] = None


def active_settings() -> Settings:
    """Settings currently in force (loaded lazily from the environment)."""
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def configure(profile: Optional[str] = None, **overrides) -> Settings:
    """
    Replace the active settings.

    None-valued overrides are ignored so CLI flags can be passed through as-is.
    """
    global _active
    base = load_settings(profile) if profile else active_settings()
    clean = {k: v for k, v in overrides.items() if v is not None}
    for key, value in clean.items():
        if key not in Settings.__dataclass_fields__:
            raise InvalidArgumentError(f"unknown setting {key!r}")
        if key != "profile" and int(value) < 0:
            raise InvalidArgumentError(f"setting {key} must be non-negative")
    _active = replace(base, **clean)
    return _active


@contextmanager
def settings_override(**overrides) -> Iterator[Settings]:
    """Temporarily change settings (used by tests and the repro runner)."""
    global _active
    previous = active_settings()
    try:
        yield configure(**overrides)
    finally:
        _active = previous
