import random
import sys
from pathlib import Path

import hypothesis
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from polyarea.geom import AllCollinearError, convex_hull  # noqa: E402
from polyarea.polygon import Instance  # noqa: E402

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

SQUARE_CENTER = Instance("sq", ((0, 0), (2, 0), (2, 2), (0, 2), (1, 1)))
BOWTIE = Instance("bow", ((0, 0), (2, 2), (2, 0), (0, 2)))


def point_sets(min_n=3, max_n=8, extent=10):
    """Distinct, not all collinear, integer point sets."""
    pts = st.lists(st.tuples(st.integers(0, extent), st.integers(0, extent)),
                   min_size=min_n, max_size=max_n, unique=True)

    def ok(ps):
        try:
            convex_hull(ps)
        except AllCollinearError:
            return False
        return True

    return pts.filter(ok)


def instances(min_n=3, max_n=8, extent=10):
    return point_sets(min_n, max_n, extent).map(lambda ps: Instance("h", tuple(ps)))


def random_instance(rng: random.Random, n_lo: int, n_hi: int, extent: int, id="r") -> Instance:
    while True:
        n = rng.randint(n_lo, n_hi)
        if (extent + 1) ** 2 < n:
            continue
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(0, extent), rng.randint(0, extent)))
        pts = tuple(sorted(pts))
        try:
            convex_hull(pts)
        except AllCollinearError:
            continue
        rng_order = list(pts)
        rng.shuffle(rng_order)
        return Instance(id, tuple(rng_order))


@pytest.fixture
def square_center():
    return SQUARE_CENTER


ACCEPTANCE: list[str] = []


def record_acceptance(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
