import pathlib

import pytest

from diagdom import generate_b1, generate_sdd1

FIXTURE_DIR = pathlib.Path(__file__).parent / "fixtures"

ENSEMBLE_SIZE = 200
ENSEMBLE_ORDERS = range(4, 13)


def ensemble_order(i):
    return 4 + i % len(ENSEMBLE_ORDERS)


@pytest.fixture(scope="session")
def sdd1_ensemble():
    """200 seeded SDD1-but-not-SDD instances of orders 4..12."""
    return [generate_sdd1(ensemble_order(i), seed=1000 + i, n1_fraction=0.5)
            for i in range(ENSEMBLE_SIZE)]


@pytest.fixture(scope="session")
def b1_ensemble():
    """200 seeded B1 instances of orders 4..12."""
    return [generate_b1(ensemble_order(i), seed=2000 + i, n1_fraction=0.45)
            for i in range(ENSEMBLE_SIZE)]


@pytest.fixture()
def fixture_path():
    def get(name):
        path = FIXTURE_DIR / name
        assert path.exists(), f"missing fixture {path}"
        return str(path)

    return get
