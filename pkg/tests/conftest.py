import pytest

from agflag import presets
from agflag.curve import standard_support

PRESETS = {
    "hermitian-2": lambda: presets.hermitian(2),
    "hermitian-3": lambda: presets.hermitian(3),
    "hermitian-4": lambda: presets.hermitian(4),
    "norm-trace-2-3": lambda: presets.norm_trace(2, 3),
    "gen-hermitian-2-3": lambda: presets.gen_hermitian(2, 3),
}

_supports = {}


def support_for(name):
    if name not in _supports:
        _supports[name] = standard_support(PRESETS[name](), 1)
    return _supports[name]


@pytest.fixture(params=list(PRESETS))
def preset_support(request):
    return support_for(request.param)


@pytest.fixture
def herm2():
    return support_for("hermitian-2")


@pytest.fixture
def normtrace():
    return support_for("norm-trace-2-3")


@pytest.fixture
def genherm():
    return support_for("gen-hermitian-2-3")


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status} {name}")
