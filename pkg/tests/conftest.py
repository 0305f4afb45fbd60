import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_acceptance = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    entry = _acceptance.setdefault(number, {"title": title, "ok": True, "seen": False})
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        entry["seen"] = True
        if call.excinfo is not None:
            entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        entry = _acceptance[number]
        status = "PASS" if entry["ok"] and entry["seen"] else "FAIL"
        terminalreporter.write_line("criterion %2d %s  %s" % (number, status, entry["title"]))


@pytest.fixture
def trefoil():
    from twistalex.twobridge import TwoBridgeParams, lin_presentation, metabelian_data
    params = TwoBridgeParams(1, 1, 1)
    return params, lin_presentation(params), metabelian_data(params, 1)
