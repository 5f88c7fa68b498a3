import pytest

from fairrank import build_tournament, gen_rotational


@pytest.fixture
def three_cycle():
    return gen_rotational(1)


@pytest.fixture
def chain3():
    # a=1 beats b=2 and c=3; b beats c
    return build_tournament(3, [(1, 2), (1, 3), (2, 3)])
