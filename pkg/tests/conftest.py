from hypothesis import settings

# The seed is fixed in pyproject's addopts; a later --hypothesis-seed overrides it.
settings.register_profile("repo", deadline=None, max_examples=100)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", ()))
            if "criterion" not in props or report.when != "call":
                continue
            elapsed = props.get("elapsed")
            timing = f"{elapsed:.2f}s" if elapsed is not None else "n/a"
            status = "PASS" if outcome == "passed" else "FAIL"
            lines.append((props["criterion"],
                          f"criterion {props['criterion']}: {status}  {props['title']} "
                          f"({timing}, limit {props['limit']:g}s)"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
