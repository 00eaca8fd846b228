from math import gcd

from hypothesis import strategies as st

from surgerycalc.model import AuxKnot, make_diagram


@st.composite
def decorated_diagrams(draw, max_n=4):
    """Random tb-decorated diagrams, all components flagged unknot, plus an aux knot."""
    n = draw(st.integers(1, max_n))
    slopes = []
    for _ in range(n):
        p = draw(st.integers(-6, 6))
        q = draw(st.integers(0, 4).filter(lambda q, p=p: (p, q) != (0, 0) and gcd(p, q) == 1))
        slopes.append((p, q))
    L = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            L[i][j] = L[j][i] = draw(st.integers(-2, 2))
    tbs = draw(st.lists(st.integers(-5, -1), min_size=n, max_size=n))
    d = make_diagram(slopes, L, tbs=tbs, unknots=True)
    aux = AuxKnot(draw(st.integers(-5, 0)), tuple(draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))))
    return d, aux


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
