import pytest


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="run the multi-minute BMW/Brauer jobs")
    parser.addoption("--seed", type=int, default=20260101,
                     help="seed for randomized tests")


_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "long: multi-minute computation, needs --long")
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    entry = _CRITERIA.setdefault(num, {"title": title, "status": "PASS", "seconds": 0.0, "notes": []})
    if rep.when == "call":
        entry["seconds"] += rep.duration
    if rep.failed:
        entry["status"] = "FAIL"
    elif rep.skipped and entry["status"] == "PASS":
        entry["notes"].append(f"{item.name} skipped")
    for key, value in item.user_properties:
        if key == "note" and rep.when == "call" and value not in entry["notes"]:
            entry["notes"].append(value)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        e = _CRITERIA[num]
        notes = f" [{'; '.join(e['notes'])}]" if e["notes"] else ""
        terminalreporter.write_line(f"criterion {num:2d}: {e['status']}  {e['title']} ({e['seconds']:.1f}s){notes}")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")
