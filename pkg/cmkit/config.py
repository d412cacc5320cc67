import os

# polygamma engine
EULER_GAMMA: float = 0.5772156649015329
DEFAULT_SHIFT_THRESHOLD: float = 10.0
DEFAULT_ASYMPTOTIC_TERMS: int = 12
MAX_ASYMPTOTIC_TERMS: int = 20
MAX_POLYGAMMA_ORDER: int = 64

# forward differences switch to their Taylor series when c <= SERIES_SWITCH * x
SERIES_SWITCH: float = 0.01

# complete-monotonicity checks
DEFAULT_MAX_ORDER: int = 12
DEFAULT_TOLERANCE: float = 1e-9
DEFAULT_GRID_X_MIN: float = 0.05
DEFAULT_GRID_X_MAX: float = 50.0
DEFAULT_GRID_POINTS: int = 60

# quadrature
DEFAULT_REL_TOL: float = 1e-10
DEFAULT_ABS_TOL: float = 1e-13
DEFAULT_MAX_NODES: int = 400_000
DEFAULT_PANEL_ORDER: int = 20

# sharpness search
DEFAULT_SCAN_POINTS: int = 200
LARGE_X_SEARCH: tuple[float, float] = (1.0, 1e6)
SMALL_X_SEARCH: tuple[float, float] = (1e-8, 1.0)


def suite_workers() -> int:
    """Worker cap for theorem suites, from CMKIT_THREADS (default 1)."""
    raw = os.getenv('CMKIT_THREADS', '1')
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
