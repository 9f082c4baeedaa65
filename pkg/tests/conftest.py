from __future__ import annotations

import os

from hypothesis import HealthCheck, settings

# deterministic by default; HYPOTHESIS_PROFILE=explore for a wider random search
settings.register_profile("ci", derandomize=True, max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("explore", max_examples=500, deadline=None, print_blob=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.TITLES):
        status, detail = module.RESULTS.get(number, ("NOT RUN", ""))
        terminalreporter.write_line(f"criterion {number:2d} {status:7} {module.TITLES[number]} ({detail})")
