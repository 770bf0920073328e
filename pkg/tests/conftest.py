import pytest

from primereg import ApproxConfig, Tables, mobius_table, sieve_primes


@pytest.fixture(scope="session")
def cfg():
    return ApproxConfig()


@pytest.fixture(scope="session")
def mobius():
    return mobius_table(64)


@pytest.fixture(scope="session")
def primes_1e4():
    return sieve_primes(10**4)


@pytest.fixture(scope="session")
def tables_1e6():
    return Tables.build(10**6)


@pytest.fixture(scope="session")
def tables_1e8():
    return Tables.build(10**8)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=_criterion_order):
            terminalreporter.write_line(line)


def _criterion_order(line):
    tag = line[len("[AC-"):line.index("]")]
    digits = "".join(c for c in tag if c.isdigit())
    return int(digits), tag
