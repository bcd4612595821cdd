import pytest

_verdicts: dict[tuple[int, str], str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    tag = getattr(getattr(item, "function", None), "criterion", None)
    if tag is None or (report.when != "call" and not report.failed):
        return
    if report.failed or _verdicts.get(tag) == "FAIL":
        _verdicts[tag] = "FAIL"
    else:
        _verdicts[tag] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), verdict in sorted(_verdicts.items()):
        terminalreporter.write_line(f"criterion {number:2d}  {verdict}  {title}")
