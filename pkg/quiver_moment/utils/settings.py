"""Per-call settings helpers.

Every tolerance and sampling default lives on an immutable QuiverSettings
object. ``DEFAULT_SETTINGS`` is never mutated; a quiver file's ``[options]``
section or a CLI flag produces a fresh object for that call only, so two
analyses running side by side cannot see each other's overrides.
"""

from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Dict, Mapping, Optional


@dataclass(frozen=True)
class QuiverSettings:
    """Numerical tolerances and sampling defaults."""

    skew_tol: float = 1e-9
    unitary_tol: float = 1e-9
    rcond_min: float = 1e-12
    identity_rtol: float = 1e-9
    abs_floor: float = 1e-12
    witness_atol: float = 1e-7
    fd_step: float = 1e-5
    fd_atol: float = 1e-6
    seed: int = 0
    trials: int = 100
    samples: int = 100

    def tolerances(self) -> Dict[str, float]:
        """The float-valued fields, for report echoes."""
        return {key: value for key, value in asdict(self).items() if isinstance(value, float)}


DEFAULT_SETTINGS = QuiverSettings()

SETTING_TYPES = {f.name: f.type for f in fields(QuiverSettings)}


def _coerce(name: str, value: Any) -> Any:
    """Coerce an option value (often a string from a file) to its field type."""
    kind = SETTING_TYPES[name]
    try:
        if kind in (int, "int"):
            if isinstance(value, float) and not value.is_integer():
                raise ValueError
            coerced = int(value)
            if coerced < 0:
                raise ValueError
            return coerced
        coerced = float(value)
    except (TypeError, ValueError):
        expected = "a non-negative integer" if kind in (int, "int") else "a positive number"
        raise ValueError(f"Option '{name}' must be {expected}, got '{value}'")
    if not coerced > 0:
        raise ValueError(f"Option '{name}' must be a positive number, got '{value}'")
    return coerced


def build_call_settings(
    overrides: Optional[Mapping[str, Any]] = None,
    base: QuiverSettings = DEFAULT_SETTINGS,
) -> QuiverSettings:
    """
    Build the settings object for a single call.

    Args:
        overrides: Option names mapped to values; ``None`` values are ignored
        base: Settings the overrides are applied to

    Returns:
        ``base`` itself when there is nothing to override, else a new object

    Raises:
        ValueError: If an option name is unknown (the message lists every
                    valid name) or a value has the wrong type.
    """
    if not overrides:
        return base
    changes = {}
    for name, value in overrides.items():
        if value is None:
            continue
        if name not in SETTING_TYPES:
            valid = ", ".join(SETTING_TYPES)
            raise ValueError(f"Unknown option '{name}'. Valid options: {valid}")
        changes[name] = _coerce(name, value)
    if not changes:
        return base
    return replace(base, **changes)


def build_applied_settings(settings: QuiverSettings) -> Dict[str, Any]:
    """
    Settings echo for a report, so every number in it can be reproduced.
    """
    return {
        "seed": settings.seed,
        "tolerances": settings.tolerances(),
        "source": "defaults" if settings == DEFAULT_SETTINGS else "per-call",
    }
