import pytest

from hochcomp import build_algebra, load, parse_input


def cyclic_text(r):
    lines = [f"vertices: {r}"]
    lines += [f"arrow: a{i + 1} : {i + 1} -> {i % r + 2 if i + 1 < r else 1}" for i in range(r)]
    lines.append("relation: " + " ".join(f"a{i + 1}" for i in range(r)) + " a1")
    return "\n".join(lines) + "\n"


def algebra(text, **kw):
    return build_algebra(*parse_input(text), **kw)


@pytest.fixture(scope="session")
def linear4():
    return load("linear4")


@pytest.fixture(scope="session")
def cyclic3():
    return load("cyclic3")


def path(A, labels):
    return A.quiver.parse_path(labels)


def ap(A, n, labels):
    from hochcomp.resolution import resolution

    w = resolution(A).element(path(A, labels), n)
    assert w is not None, (labels, n)
    return w


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
