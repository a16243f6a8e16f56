import time

import pytest

from anyonic.config import preset
from anyonic.hopf import HopfData
from anyonic.scalar import context


@pytest.fixture
def ctx18():
    return context(18)


@pytest.fixture
def nilpotent():
    return preset("z18-nilpotent").to_presentation()


@pytest.fixture
def free():
    return preset("z18-free").to_presentation()


@pytest.fixture
def envelope_nonabelian():
    return preset("z18-nonabelian").to_presentation()


@pytest.fixture
def nonabelian():
    return preset("z18-nonabelian").to_qla()


@pytest.fixture
def abelian():
    return preset("z18-abelian").to_qla()


@pytest.fixture
def hopf_nilpotent(nilpotent):
    return HopfData(nilpotent)


# -- acceptance report ---------------------------------------------------------

_ACCEPTANCE_LINES = []


class _Criterion:
    def __init__(self, label, limit):
        self.label, self.limit = label, limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        late = exc_type is None and elapsed >= self.limit
        status = "PASS" if exc_type is None and not late else "FAIL"
        why = " (too slow)" if late else (f" ({exc_type.__name__})" if exc_type else "")
        line = f"{status}  {self.label}  {elapsed:.2f}s / {self.limit}s{why}"
        _ACCEPTANCE_LINES.append(line)
        print("\n" + line)
        if late:
            raise AssertionError(f"{self.label}: {elapsed:.2f}s exceeds {self.limit}s")
        return False


@pytest.fixture
def criterion():
    """with criterion("AC1 ...", limit_seconds): ... records one pass/fail line."""
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1][2:])):
            terminalreporter.write_line(line)
