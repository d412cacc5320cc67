from .engine import (
    DEFAULT_ENGINE,
    EngineConfig,
    digamma,
    polygamma,
    polygamma_asymptotic_leading,
    polygamma_table,
)
from .oracle import integral_representation_oracle

__all__ = [
    'DEFAULT_ENGINE',
    'EngineConfig',
    'digamma',
    'integral_representation_oracle',
    'polygamma',
    'polygamma_asymptotic_leading',
    'polygamma_table',
]
