import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# acceptance criteria report one summary line each
ACCEPTANCE = {}


def record_acceptance(criterion, part, passed, detail):
    ACCEPTANCE.setdefault(criterion, []).append((part, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[criterion]
        status = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        detail = "; ".join(f"{name}: {'pass' if ok else 'FAIL'} ({d})" for name, ok, d in parts)
        terminalreporter.write_line(f"criterion {criterion}: {status}  {detail}")
