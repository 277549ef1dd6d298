import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in [k for k in sorted(k for k in mod.RESULTS if isinstance(k, int))] + ["runtime"]:
        if key in mod.RESULTS:
            terminalreporter.write_line(mod.RESULTS[key])
