import pytest

from barytop.homology import HomologyProfile
from barytop.sset import minimal_sphere, rp2, surface, torus


def profile(spec, top=None):
    """Shorthand: ``{degree: rank}`` or ``{degree: (rank, torsion)}``."""
    norm = {d: (v, ()) if isinstance(v, int) else v for d, v in spec.items()}
    return HomologyProfile.from_spec(norm, max(norm) if top is None else top)


def same(a: HomologyProfile, b: HomologyProfile) -> bool:
    return a.same_as(b)


@pytest.fixture(scope="session")
def corpus():
    return {"S1": minimal_sphere(1), "S2": minimal_sphere(2), "T": torus(),
            "RP2": rp2(), "C2": surface(2)}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
