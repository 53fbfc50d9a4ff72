import functools

import pytest

from veldkamp import (
    build_extended_dynkin_d, build_veldkamp_space, enumerate_hyperplanes, maximal_subspaces,
)
from veldkamp.labeling import builtin_labeling, induce

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def dynkin_space(n):
    return build_veldkamp_space(enumerate_hyperplanes(build_extended_dynkin_d(n)))


@functools.lru_cache(maxsize=None)
def dynkin_maximal(n):
    return maximal_subspaces(dynkin_space(n))


@functools.lru_cache(maxsize=None)
def dynkin_induced(n, variant=1):
    return induce(builtin_labeling(n, variant), dynkin_space(n).catalog)


@pytest.fixture(params=[4, 5, 6, 7, 8])
def n(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
