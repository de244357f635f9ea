import pytest

from hochcomp import load
from hochcomp.corpus import corpus_names
from hochcomp.resolution import (enumerate_ap, op_chain, resolution, verify_ap_op, verify_complex,
                                 verify_sub_structure)

from conftest import algebra, ap, cyclic_text, path


def labels(A, ws):
    return [resolution(A).label(w) for w in ws]


def test_linear_ap(linear4):
    A = linear4
    assert labels(A, enumerate_ap(A, 0)) == ["e1", "e2", "e3", "e4"]
    assert labels(A, enumerate_ap(A, 1)) == ["a", "b", "c"]
    assert labels(A, enumerate_ap(A, 2)) == ["a b", "b c"]
    assert labels(A, enumerate_ap(A, 3)) == ["a b c"]
    assert enumerate_ap(A, 4) == []


@pytest.mark.parametrize("r", [2, 3, 4])
def test_cyclic_ap(r):
    A = algebra(cyclic_text(r))
    cycle = " ".join(f"a{i + 1}" for i in range(r))
    for n in range(2, 8):
        assert labels(A, enumerate_ap(A, n)) == [" ".join([cycle] * (n - 1) + ["a1"])]


def test_sub_examples(linear4, cyclic3):
    res = resolution(linear4)
    subs = res.sub(ap(linear4, 3, "a b c"))
    assert [(res.label(s.child), s.offset) for s in subs] == [("a b", 0), ("b c", 1)]
    res = resolution(cyclic3)
    subs = res.sub(ap(cyclic3, 2, "a1 a2 a3 a1"))
    assert [(res.label(s.child), s.offset) for s in subs] == [
        ("a1", 0), ("a2", 1), ("a3", 2), ("a1", 3)]


def test_cyclic_sub_has_equal_divisors(cyclic3):
    res = resolution(cyclic3)
    w = ap(cyclic3, 3, "a1 a2 a3 a1 a2 a3 a1")
    first, second = res.sub(w)
    assert first.child == second.child
    assert (first.offset, second.offset) == (0, 3)


def test_d3_linear(linear4):
    A = linear4
    d = resolution(A).d(ap(A, 3, "a b c"))
    assert d == {
        (path(A, "a"), ap(A, 2, "b c"), path(A, "e4")): 1,
        (path(A, "e1"), ap(A, 2, "a b"), path(A, "c")): -1,
    }


def test_d2_sums_over_arrows(linear4):
    A = linear4
    d = resolution(A).d(ap(A, 2, "a b"))
    assert d == {
        (path(A, "e1"), ap(A, 1, "a"), path(A, "b")): 1,
        (path(A, "a"), ap(A, 1, "b"), path(A, "e3")): 1,
    }


def test_d1_cyclic(cyclic3):
    A = cyclic3
    d = resolution(A).d(ap(A, 1, "a1"))
    assert d == {
        (path(A, "a1"), ap(A, 0, "e2"), path(A, "e2")): 1,
        (path(A, "e1"), ap(A, 0, "e1"), path(A, "a1")): -1,
    }


def test_d2_d3_vanishes(linear4):
    res = resolution(linear4)
    assert res.apply_d(res.d(ap(linear4, 3, "a b c"))) == {}


def test_dead_terms_dropped():
    # d_4 of a b c d on A5 with quadratic relations: both outer factors are in I
    A = algebra("vertices: 5\narrow: a : 1 -> 2\narrow: b : 2 -> 3\narrow: c : 3 -> 4\n"
                "arrow: d : 4 -> 5\nrelation: a b\nrelation: b c\nrelation: c d\n")
    res = resolution(A)
    w = ap(A, 4, "a b c d")
    assert len(res.differential_terms(w)) == 2
    assert res.d(w) == {(path(A, "a"), ap(A, 3, "b c d"), path(A, "e5")): 1,
                        (path(A, "e1"), ap(A, 3, "a b c"), path(A, "d")): 1}


def test_op_chain_of_overlapping_relations():
    A = load("linear6")
    w = ap(A, 3, "a b c d")
    assert w.chain == ((0, 3), (1, 4))
    assert op_chain(A, w.support.arrows) == ((0, 3), (1, 4))


def test_greedy_window_picks_minimal_start():
    # relations x x x and x x on a loop are not minimal, so use two letters
    A = algebra("vertices: 1\narrow: x : 1 -> 1\narrow: y : 1 -> 1\n"
                "relation: x y x\nrelation: y x y\nrelation: x x\nrelation: y y\n")
    w = ap(A, 3, "x y x y")
    assert w.chain == ((0, 3), (1, 4))
    assert resolution(A).element(path(A, "x y x y x"), 3) is None


@pytest.mark.parametrize("name", corpus_names())
def test_structure_suites(name):
    A = load(name)
    for rep in (verify_complex(A, 6), verify_ap_op(A, 6), verify_sub_structure(A, 6)):
        assert rep.ok, rep.failure
