"""Resource guard defaults shared by enumeration-heavy operations."""

from __future__ import annotations

import os

DEFAULT_CAP = 2_000_000


def default_cap() -> int:
    """Sequence/matrix size guard; overridable via KOSZULHH_CAP."""
    raw = os.environ.get("KOSZULHH_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"KOSZULHH_CAP must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("KOSZULHH_CAP must be positive")
    return value
