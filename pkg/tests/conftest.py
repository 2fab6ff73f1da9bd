import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import gcdsums as G

# the function pairs exercised throughout: (id, mu), (1, 1), (phi, 1) and
# (id_(1+a), mu) at a = -1/2
CATALOG = [(G.ID, G.MU), (G.ONE, G.ONE), (G.PHI, G.ONE), (G.id_pow(0.5), G.MU)]


@pytest.fixture(scope="session")
def catalog_tables():
    return [(G.sieve(f, 5000), G.sieve(g, 5000)) for f, g in CATALOG]
