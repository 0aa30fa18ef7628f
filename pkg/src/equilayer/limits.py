"""Resource guards shared by every module that can blow up combinatorially."""

from __future__ import annotations

import os

DEFAULT_MAX_SIZE = 10**7
DEFAULT_MAX_DEGREE = 8
ENV_MAX_SIZE = "EQUILAYER_MAX_SIZE"

_override: int | None = None


class ResourceBoundError(RuntimeError):
    """Raised instead of attempting a computation above the configured bound."""


def max_size() -> int:
    if _override is not None:
        return _override
    raw = os.environ.get(ENV_MAX_SIZE)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{ENV_MAX_SIZE} must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_SIZE


def set_max_size(value: int | None) -> None:
    """Set a process-wide size cap; ``None`` restores env/default lookup."""
    global _override
    _override = value


def check_size(count: int, what: str) -> None:
    cap = max_size()
    if count > cap:
        raise ResourceBoundError(f"{what} needs {count} cells, above the size bound {cap}")
