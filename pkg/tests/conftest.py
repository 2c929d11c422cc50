import pytest

from orthox import Combinatorial, GroupCase

COMBINATORIAL_FIVE = [
    Combinatorial(None, None),
    Combinatorial(3, None),
    Combinatorial(None, 2),
    Combinatorial(3, 2),
    Combinatorial(1, 1),
]

GROUP_CASES = [GroupCase(la, rb, order)
               for la in (False, True)
               for rb in (False, True)
               for order in (None, 1, 2, 3, 5)]


@pytest.fixture(scope="session")
def free_most():
    return Combinatorial(None, None)
