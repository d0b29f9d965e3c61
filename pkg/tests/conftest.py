import random

import pytest

from liftkit.braiding import BraidingMatrix
from liftkit.scalars import ParamScalar
from liftkit.smash import SmashAlgebra

ACCEPTANCE = {}


@pytest.fixture
def generic():
    """Smash algebra over theta = 2 with every q_ij a free symbol."""
    P = ParamScalar.param
    q = BraidingMatrix([[P("q11"), P("q12")], [P("q21"), P("q22")]])
    return SmashAlgebra(q, order=12)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
