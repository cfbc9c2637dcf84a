"""Acceptance reporting: one PASS/FAIL line per criterion in the terminal summary."""
import pytest

_RESULTS = {}
_DETAILS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): acceptance criterion with a summary line")


@pytest.fixture
def report(request):
    """Attach measured values to the current criterion's summary line."""
    marker = request.node.get_closest_marker("acceptance")
    name = marker.args[0] if marker else request.node.name

    def note(**kw):
        _DETAILS.setdefault(name, {}).update(kw)
    return note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    name = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _RESULTS[name] = "PASS" if rep.passed else "FAIL"


def _fmt(v):
    return f"{v:.6g}" if isinstance(v, float) else str(v)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _RESULTS.items():
        extra = " ".join(f"{k}={_fmt(v)}" for k, v in _DETAILS.get(name, {}).items())
        terminalreporter.write_line(f"ACCEPTANCE {name} {status} {extra}".rstrip())
    n_fail = sum(s == "FAIL" for s in _RESULTS.values())
    terminalreporter.write_line(f"ACCEPTANCE total={len(_RESULTS)} failed={n_fail}")
