import pytest

from cmkit.family import FamilyIndex, FamilyParams, alpha
from cmkit.verifier import GridSpec


@pytest.fixture
def index_3221():
    return FamilyIndex.of(3, 2, 2, 1)


@pytest.fixture
def index_2110():
    return FamilyIndex.of(2, 1, 1, 0)


@pytest.fixture
def params_at_alpha(index_3221):
    """(3,2,2,1) at its alpha level with c = 0.5."""
    return FamilyParams(index=index_3221, s=float(alpha(index_3221)), c=0.5)


@pytest.fixture
def small_grid():
    return GridSpec(x_min=0.1, x_max=20.0, points=12)


@pytest.fixture
def wide_grid():
    """Reaches far enough out that ratios sit close to their x -> inf limit."""
    return GridSpec(x_min=0.05, x_max=1e4, points=10)
