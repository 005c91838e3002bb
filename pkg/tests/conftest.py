import pytest

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; stays FAIL unless the test sets ok."""
    entry = {"id": request.node.name, "ok": False, "detail": ""}
    yield entry
    request.config.stash.setdefault(_RESULTS, []).append(entry)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for e in sorted(results, key=lambda e: e["id"]):
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"{status}  {e['id']}: {e['detail']}")
