import pytest

from ubi_threshold import preset_us_2025

# one (number, title, passed, detail) tuple per acceptance criterion
ACCEPTANCE_LINES = []


@pytest.fixture
def preset():
    return preset_us_2025()


@pytest.fixture
def econ(preset):
    return preset.econ


@pytest.fixture
def fiscal(preset):
    return preset.fiscal


@pytest.fixture
def acceptance():
    def record(number, title, passed, detail=""):
        ACCEPTANCE_LINES.append((number, title, bool(passed), detail))
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail}")
