"""Size guards.  Each default can be overridden by an environment variable of the same name."""

import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return default if raw is None else int(raw)


class GuardError(RuntimeError):
    """An input exceeds a configured size guard."""

    def __init__(self, guard: str, value: int, limit: int, hint: str = ""):
        msg = f"{guard}: {value} exceeds limit {limit}"
        if hint:
            msg += f" ({hint})"
        super().__init__(msg)
        self.guard = guard
        self.value = value
        self.limit = limit


MAX_COUNT_EDGES = _env_int("ALONTARSI_MAX_COUNT_EDGES", 30)
MAX_SEARCH_EDGES = _env_int("ALONTARSI_MAX_SEARCH_EDGES", 24)
MAX_COEFF_EDGES = _env_int("ALONTARSI_MAX_COEFF_EDGES", 24)
MAX_COEFF_VERTICES = _env_int("ALONTARSI_MAX_COEFF_VERTICES", 10)
MAX_CHOOSE_VERTICES = _env_int("ALONTARSI_MAX_CHOOSE_VERTICES", 7)
MAX_CHOOSE_PALETTE = _env_int("ALONTARSI_MAX_CHOOSE_PALETTE", 20)
MAX_PAINT_VERTICES = _env_int("ALONTARSI_MAX_PAINT_VERTICES", 8)
MAX_COLOR_VERTICES = _env_int("ALONTARSI_MAX_COLOR_VERTICES", 12)
BRUTE_COUNT_EDGES = 16  # below this many edges, counting enumerates all 2^m subsets


def snapshot() -> dict:
    return {k: v for k, v in globals().items() if k.startswith(("MAX_", "BRUTE_"))}
