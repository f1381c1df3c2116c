from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parents[1] / "src" / "linkfloer" / "data"

# acceptance results, filled in by test_acceptance.py and echoed at the end
ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE_KEY, {})


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def meridian_spec_path():
    return DATA / "trefoil_meridian.spec"


@pytest.fixture
def interior_spec_path():
    return DATA / "trefoil_interior.spec"


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
