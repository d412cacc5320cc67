from importlib.metadata import PackageNotFoundError, version

from .family import FamilyIndex, FamilyParams, alpha, beta, f_derivative, f_eval
from .polygamma import digamma, polygamma

try:
    __version__ = version('cmkit')
except PackageNotFoundError:
    __version__ = '0.1.0'

__all__ = [
    'FamilyIndex',
    'FamilyParams',
    'alpha',
    'beta',
    'digamma',
    'f_derivative',
    'f_eval',
    'polygamma',
]
