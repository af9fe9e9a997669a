import re


CRITERIA = {
    1: "adequacy: members = oracle for k <= 12",
    2: "decision agreement with a G4ip prover",
    3: "finitary forests are guarded, well-bound and closed",
    4: "finiteness: saturation, counts, infinite families",
    5: "complementarity of the forest predicates",
    6: "negative translation round trips and member sets",
    7: "weight decreases along every search step",
    8: "decontraction relates members of extended contexts",
    9: "performance and parse/render round trip",
}

_outcomes: dict = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    failed = report.failed or (report.when == "call" and report.skipped)
    _outcomes[n] = _outcomes.get(n, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        verdict = "PASS" if _outcomes[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {CRITERIA[n]}")
