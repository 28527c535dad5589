from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

from hopfschur.exactnum import galois_group, nf_create
from hopfschur.serialize import extension_block, load_json

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repo")

ROOT = Path(__file__).resolve().parent.parent
CONFIGS = ROOT / "configs"
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "golden"


def config(name):
    return load_json(str(CONFIGS / name))


def gaussian_ext():
    L = nf_create((1, 0, 1), label="Q(i)")
    return galois_group(L, [L.gen(), -L.gen()])


def zeta5_ext():
    L = nf_create((1, 1, 1, 1, 1), irreducibility_witness=2, label="Q(zeta5)")
    z = L.gen()
    return galois_group(L, [z, z ** 2, z ** 3, z ** 4])


def biquadratic_ext():
    return extension_block(config("finitize_biquadratic.json")["witness"]["K"], "$")


@pytest.fixture(scope="session")
def qi():
    return gaussian_ext()


@pytest.fixture(scope="session")
def z5():
    return zeta5_ext()


def frac(x):
    return Fraction(x)


# -- acceptance summary --------------------------------------------------------------------

CRITERIA = {}


@pytest.fixture
def criterion():
    """Record a single pass/fail line for an acceptance criterion, with its time budget."""
    import time

    class Recorder:
        def __init__(self):
            self.start = time.perf_counter()

        def finish(self, number, title, limit, checks):
            elapsed = time.perf_counter() - self.start
            failed = [name for name, ok in checks.items() if not ok]
            passed = not failed
            ok = passed and elapsed < limit
            CRITERIA[number] = (f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
                                f"  ({elapsed:.2f}s, limit {limit}s)")
            assert passed, f"criterion {number} failed: {failed}"
            assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s > {limit}s"

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
