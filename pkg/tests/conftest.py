import pytest

from bisectrix import GF, Line, QQ, Quadrilateral


def make_quad(field, *literals):
    return Quadrilateral(*(Line.parse(field, text) for text in literals))


E1_SIDES = ("Y=0", "Y=X+1", "X=0", "Y=2X-1")
E2_SIDES = ("Y=0", "X=0", "Y=1", "X=1")


@pytest.fixture
def e1():
    """Worked example: A: Y=0, B: Y=X+1, A': X=0, B': Y=2X-1 over Q."""
    return make_quad(QQ, *E1_SIDES)


@pytest.fixture
def e2():
    """Unit-square parallelogram over Q."""
    return make_quad(QQ, *E2_SIDES)


@pytest.fixture
def e1_mod7():
    return make_quad(GF(7), *E1_SIDES)


@pytest.fixture
def e2_mod5():
    return make_quad(GF(5), *E2_SIDES)


@pytest.fixture
def improper():
    """Three sides through the origin: A, B and A' concurrent."""
    return make_quad(QQ, "Y=0", "Y=X", "X=0", "Y=2X+1")
