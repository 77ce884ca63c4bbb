import pytest

from workbench.scalars import FieldSpec
from workbench.scenarios import ScenarioConfig, build_pair, _quotient, DEFAULT_RELATORS
from workbench.fpgroup import gamma_presentation, t_presentation

F0 = FieldSpec(0, 12)
F2 = FieldSpec(2, 3)


@pytest.fixture(scope="session")
def t_group():
    return _quotient(t_presentation(), DEFAULT_RELATORS["t-case"])


@pytest.fixture(scope="session")
def gamma4_group():
    return _quotient(gamma_presentation(4), DEFAULT_RELATORS["gamma4-case"])


@pytest.fixture(scope="session")
def gamma2_group():
    return _quotient(gamma_presentation(2), ("a^2", "b^2"))


@pytest.fixture(scope="session")
def gamma3_group():
    return _quotient(gamma_presentation(3), ("a^6", "b^6"))


def _pair(case, char):
    return build_pair(ScenarioConfig(case, characteristic=char))


@pytest.fixture(scope="session", params=[0, 2], ids=["char0", "char2"])
def t_pair(request):
    return _pair("t-case", request.param)


@pytest.fixture(scope="session", params=[0, 2], ids=["char0", "char2"])
def gamma4_pair(request):
    return _pair("gamma4-case", request.param)


@pytest.fixture(scope="session")
def t_pair0():
    return _pair("t-case", 0)


@pytest.fixture(scope="session")
def gamma4_pair0():
    return _pair("gamma4-case", 0)
