import pytest

# Sets of Toda primes for n = 1..30, transcribed from the published table.
SMALL_SETS = {
    1: (3, 5), 2: (3, 5), 3: (5, 7, 13), 4: (3, 5, 17), 5: (3, 11),
    6: (5, 7, 13), 7: (3, 5, 29), 8: (3, 5, 17), 9: (5, 7, 13, 19, 37),
    10: (3, 11, 41), 11: (3, 5, 23), 12: (5, 7, 13, 17), 13: (3, 5, 53),
    14: (3, 5, 29), 15: (7, 11, 13, 31, 61), 16: (3, 5, 17), 17: (3, 5),
    18: (5, 7, 13, 19, 37, 73), 19: (3, 5), 20: (3, 11, 17, 41),
    21: (5, 13, 29, 43), 22: (3, 5, 23, 89), 23: (3, 5, 47),
    24: (5, 7, 13, 17, 97), 25: (3, 11, 101), 26: (3, 5, 53),
    27: (5, 7, 13, 19, 37, 109), 28: (3, 5, 17, 29, 113), 29: (3, 5, 59),
    30: (7, 11, 13, 31, 41, 61),
}


@pytest.fixture(scope="session")
def small_sets():
    return SMALL_SETS


def trial_division_isprime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# (criterion id, title, outcome, seconds) collected by test_acceptance.py
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, outcome, seconds in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{outcome:4} AC{cid:<2} {title} ({seconds:.2f}s)")
