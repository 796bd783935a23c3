import random

from hypothesis import settings, strategies as st

from tabrw.diagrams import StringOfColumns

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")


def words(n=4, max_size=8):
    return st.lists(st.integers(1, n), max_size=max_size).map(tuple)


@st.composite
def columns(draw, n=4):
    k = draw(st.integers(1, n))
    return tuple(sorted(draw(st.sets(st.integers(1, n), min_size=k, max_size=k))))


@st.composite
def strings_of_columns(draw, n=4, max_cols=5, spread=4):
    cols = draw(st.lists(columns(n), min_size=1, max_size=max_cols))
    glue = [draw(st.integers(-spread, len(a) + len(b) + spread)) for a, b in zip(cols, cols[1:])]
    return StringOfColumns(tuple(cols), tuple(glue))


def random_word(rng: random.Random, n: int, length: int):
    return tuple(rng.randint(1, n) for _ in range(length))


# Filled by test_acceptance.py, one line per criterion.
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
