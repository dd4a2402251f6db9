from fractions import Fraction as F

import pytest

from axial.catalog import three_gen_universal
from axial.fischer import fischer_space, transpositions
from axial.fischer import matsuo_algebra
from axial.suites import g334_example


@pytest.fixture(scope="session")
def universal():
    return three_gen_universal(F(1, 3), F(1, 5), F(1, 7), F(1, 11))


@pytest.fixture(scope="session")
def s4_space():
    return fischer_space(transpositions(4))


@pytest.fixture(scope="session")
def s4_matsuo(s4_space):
    return matsuo_algebra(s4_space, F(1, 2))


@pytest.fixture(scope="session")
def g334():
    return g334_example()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import SUMMARY

    if SUMMARY:
        terminalreporter.section("acceptance criteria")
        for n in sorted(SUMMARY):
            for line in SUMMARY[n]:
                terminalreporter.write_line(line)
