import _sampling  # tests/ is on sys.path under pytest's default import mode


def pytest_terminal_summary(terminalreporter):
    results = _sampling.ACCEPTANCE_RESULTS
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, title, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title} -- {detail}")
