from fractions import Fraction

import pytest

from cuboidcurve.curve import Curve

# Every point the library certifies during the session, as (q, p, r, holds).
PRODUCED_POINTS: list[tuple[Fraction, Fraction, Fraction, bool]] = []
CRITERIA: list[str] = []


def eq26_holds(q, p, r) -> bool:
    return r * r - p * p == q * q * (1 - r * r * p * p)


@pytest.fixture(autouse=True, scope="session")
def record_points():
    original = Curve._certify

    def recording(self, p, r):
        PRODUCED_POINTS.append((self.q, p, r, eq26_holds(self.q, p, r)))
        return original(self, p, r)

    Curve._certify = recording
    yield
    Curve._certify = original


def pytest_sessionfinish(session, exitstatus):
    bad = [t for t in PRODUCED_POINTS if not t[3]]
    if bad:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
    if PRODUCED_POINTS:
        bad = sum(1 for t in PRODUCED_POINTS if not t[3])
        status = "PASS" if bad == 0 else "FAIL"
        terminalreporter.write_line(
            f"{status} criterion 5 (whole run): identity r^2 - p^2 = q^2(1 - r^2 p^2) "
            f"held on {len(PRODUCED_POINTS) - bad}/{len(PRODUCED_POINTS)} produced points"
        )
