import pytest

from src.expsim import simulate_counts


@pytest.fixture()
def analytic_records(row_a_phases, noiseless):
    return simulate_counts(row_a_phases, noiseless, 10_000, analytic=True)
