import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linedecomp import families as fam  # noqa: E402


@pytest.fixture(scope="session")
def cubic_fixtures():
    return {
        "K4": fam.complete_graph(4),
        "K33": fam.complete_bipartite(3, 3),
        "prism": fam.prism_graph(3),
        "petersen": fam.petersen_graph(),
        "bridged": fam.bridged_cubic_example(),
    }


@pytest.fixture(scope="session")
def x34():
    return fam.build_X(3, 4)


@pytest.fixture(scope="session")
def k5_decompositions():
    """Everywhere compatible decompositions of L(K5), one per perfect tour set."""
    from linedecomp.solvers import enumerate_perfect_euler_sets
    from linedecomp.tours import tours_to_decomposition

    K5 = fam.complete_graph(5)
    status, sets, _ = enumerate_perfect_euler_sets(K5, limit=40)
    assert status == "found"
    return [tours_to_decomposition(K5, tours) for tours in sets]
