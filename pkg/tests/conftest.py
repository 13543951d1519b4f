import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k[1:])):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
