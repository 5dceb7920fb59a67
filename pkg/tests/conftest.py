def pytest_configure(config):
    config.acceptance_results = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "acceptance_results", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number].line())
    passed = sum(r.ok for r in results.values())
    terminalreporter.write_line(f"{passed}/{len(results)} criteria passed")
