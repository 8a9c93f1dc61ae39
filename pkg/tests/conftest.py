from fractions import Fraction

from hypothesis import strategies as st

from oplus.exactnum import QuadExt

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
nonzero_fractions = small_fractions.filter(lambda f: f != 0)


@st.composite
def quadext(draw, d=None):
    if d is None:
        d = draw(st.sampled_from([2, 3, 5, 6, 89]))
    return QuadExt(draw(small_fractions), draw(small_fractions), d)


def fraction_points(rng, count, exclude=()):
    """Deterministic random rationals avoiding ``exclude``."""
    out = []
    while len(out) < count:
        x = Fraction(rng.randint(-200, 200), rng.randint(1, 25))
        if x not in exclude:
            out.append(x)
    return out


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
