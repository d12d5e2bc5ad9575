import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# filled in by test_acceptance.py: criterion number -> (passed, description, detail)
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        passed, desc, detail = ACCEPTANCE_RESULTS[num]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {desc} -- {detail}")
    terminalreporter.write_line(
        "[N/A ] criterion 9: qualitative AI/ASR and legibility claims, nothing to measure")
