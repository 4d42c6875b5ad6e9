import pytest

from gpdkit.crossed import automorphism_xmod, from_normal_subgroup
from gpdkit.dgt import lambda_functor, square_model
from gpdkit.finite import (
    cyclic_group,
    even_elements,
    group_as_groupoid,
    symmetric_group,
)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def a3s3(s3):
    return from_normal_subgroup(s3, even_elements(s3), name="a3s3")


@pytest.fixture(scope="session")
def a3s3_model(a3s3):
    return lambda_functor(a3s3)


@pytest.fixture(scope="session")
def aut_s3(s3):
    return automorphism_xmod(s3)


@pytest.fixture(scope="session")
def aut_s3_model(aut_s3):
    return lambda_functor(aut_s3)


@pytest.fixture(scope="session")
def sq_s3(s3):
    return square_model(group_as_groupoid(s3, name="s3"))


@pytest.fixture(scope="session")
def sq_c2():
    return square_model(group_as_groupoid(cyclic_group(2), name="c2"))
