"""Resource caps for exhaustive computations.

Every routine that iterates over a full codeword space or subspace family
checks the relevant cap first and raises ResourceLimitError instead of
starting a hopeless loop. RANKLAB_CAP overrides both knobs.
"""

import os

from .errors import ResourceLimitError

DEFAULT_EXHAUSTIVE_CAP = 2**24
DEFAULT_ENUMERATION_CAP = 10**9


def exhaustive_cap() -> int:
    value = os.environ.get("RANKLAB_CAP")
    if value is not None:
        return int(value)
    return DEFAULT_EXHAUSTIVE_CAP


def enumeration_cap() -> int:
    value = os.environ.get("RANKLAB_CAP")
    if value is not None:
        return int(value)
    return DEFAULT_ENUMERATION_CAP


def check_exhaustive(size: int, what: str) -> None:
    cap = exhaustive_cap()
    if size > cap:
        raise ResourceLimitError(
            f"{what} requires visiting {size} objects, above the cap {cap} "
            f"(set RANKLAB_CAP to override)",
            size=size,
            cap=cap,
        )


def check_enumeration(count: int, what: str) -> None:
    cap = enumeration_cap()
    if count > cap:
        raise ResourceLimitError(
            f"{what} would enumerate {count} objects, above the cap {cap} "
            f"(set RANKLAB_CAP to override)",
            size=count,
            cap=cap,
        )
