import pytest

from maxclass.standard_form import GroupSpec, LambdaTuple


@pytest.fixture
def make_tuple():
    def make(n, p, N, exponents):
        return LambdaTuple.checked(GroupSpec(n, p, N), exponents)
    return make
