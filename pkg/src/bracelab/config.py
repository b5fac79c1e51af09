"""Size caps for the exhaustive algorithms.

``BRACELAB_CAP`` in the environment overrides every enumeration cap at once
(subbrace enumeration and both brace-enumeration strategies). The validation
cap is separate since it only switches the associativity test, it never
refuses work.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_VAR = "BRACELAB_CAP"


@dataclass(frozen=True)
class Caps:
    validate_exhaustive: int = 512
    subbraces: int = 64
    enumerate_tables: int = 6
    enumerate_lambda: int = 8


def caps() -> Caps:
    base = Caps()
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return base
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return replace(base, subbraces=value, enumerate_tables=value, enumerate_lambda=value)
