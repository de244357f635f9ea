import random

import pytest
from hypothesis import given, settings, strategies as st

from hochcomp import load
from hochcomp.corpus import corpus_names
from hochcomp.algebra import AlgebraError

from conftest import algebra, cyclic_text, path


def test_cyclic_basis_size():
    A = algebra(cyclic_text(3))
    assert A.dim == 15
    assert [len([p for p in A.basis if p.source == x]) for x in range(3)] == [4, 6, 5]
    # oracle: every arrow word of length <= 6 that composes and avoids the relation
    import itertools
    rel = (0, 1, 2, 0)
    words = [w for n in range(7) for w in itertools.product(range(3), repeat=n)
             if all((a + 1) % 3 == b for a, b in zip(w, w[1:]))
             and not any(w[i:i + 4] == rel for i in range(len(w)))]
    assert len(words) - 1 + 3 == A.dim  # the empty word stands for three vertices


def test_linear_basis(linear4):
    assert [linear4.label(p) for p in linear4.basis] == ["e1", "e2", "e3", "e4", "a", "b", "c"]


def test_non_minimal_divides():
    with pytest.raises(AlgebraError, match="non-minimal relation set: 'a b' divides 'a b c'"):
        algebra("vertices: 4\narrow: a : 1 -> 2\narrow: b : 2 -> 3\narrow: c : 3 -> 4\n"
                "relation: a b\nrelation: a b c\n")


def test_non_minimal_duplicate():
    with pytest.raises(AlgebraError, match="listed twice"):
        algebra("vertices: 1\narrow: x : 1 -> 1\nrelation: x x\nrelation: x x\n")


def test_relation_too_short():
    with pytest.raises(AlgebraError, match="length 1"):
        algebra("vertices: 1\narrow: x : 1 -> 1\nrelation: x\n")


def test_infinite_basis_reports_witness():
    with pytest.raises(AlgebraError, match="not finite within cap 10: relation-free path 'x x"):
        algebra("vertices: 1\narrow: x : 1 -> 1\narrow: y : 1 -> 1\nrelation: x y\n", cap=10)


def test_in_ideal(linear4, cyclic3):
    assert linear4.in_ideal(path(linear4, "a b c"))
    assert not linear4.in_ideal(path(linear4, "b"))
    assert cyclic3.in_ideal(path(cyclic3, "a1 a2 a3 a1"))
    assert not cyclic3.in_ideal(path(cyclic3, "a2 a3 a1 a2"))


def test_multiply(linear4, cyclic3):
    A = linear4
    assert A.mul(A.vertex(0), path(A, "a")) == path(A, "a")
    assert A.mul(path(A, "a"), path(A, "b")) is None
    B = cyclic3
    assert B.mul(path(B, "a1 a2 a3"), path(B, "a1 a2")) is None
    assert B.mul(path(B, "a2"), path(B, "a3 a1 a2")) == path(B, "a2 a3 a1 a2")
    x = {path(B, "a1"): 2, path(B, "a2"): 1}
    assert B.multiply(x, {path(B, "a2"): 3}) == {path(B, "a1 a2"): 6}
    assert B.multiply(B.one(), x) == x == B.multiply(x, B.one())


@pytest.mark.parametrize("name", ["cyclic3", "twoloops", "linear6", "parallel"])
def test_in_ideal_iff_not_basis(name):
    A = load(name)
    basis = set(A.basis)
    Q = A.quiver
    level = [Q.arrow(a) for a in range(len(Q.arrows))]
    for _ in range(6):
        for p in level:
            assert A.in_ideal(p) == (p not in basis)
        level = [Q.path(p.arrows + (a,)) for p in level for a in Q.out_arrows[p.target]]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associative_with_unit(data):
    A = load("twoloops")
    pick = st.sampled_from(A.basis)
    x, y, z = (data.draw(st.dictionaries(pick, st.integers(-3, 3), max_size=3)) for _ in range(3))
    x, y, z = (A.clean(v) for v in (x, y, z))
    m = A.multiply
    assert m(m(x, y), z) == m(x, m(y, z))
    assert m(A.one(), x) == x == m(x, A.one())


@pytest.mark.parametrize("name", corpus_names())
def test_multiply_associative_unital_on_corpus(name):
    A = load(name)
    rng = random.Random(name)

    def element():
        return A.clean({rng.choice(A.basis): rng.randint(-3, 3) for _ in range(3)})

    for _ in range(200):
        x, y, z = element(), element(), element()
        assert A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z))
        assert A.multiply(A.one(), x) == x == A.multiply(x, A.one())


@pytest.mark.parametrize("name", corpus_names())
def test_paths_between_is_exhaustive(name):
    A = load(name)
    assert A.dim == len(A.basis) == len(set(A.basis))
    for i in A.quiver.vertices:
        for j in A.quiver.vertices:
            want = [p for p in A.basis if (p.source, p.target) == (i, j)]
            assert A.paths_between(i, j) == want
