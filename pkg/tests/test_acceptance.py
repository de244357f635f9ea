"""Acceptance criteria, one test each.

Every test appends one ``PASS``/``FAIL`` line to ``RESULTS``; the lines
are printed in the pytest terminal summary (see ``conftest.py``) and by
``python tests/test_acceptance.py``.
"""

import time

import pytest

from hochcomp import build_algebra, parse_input
from hochcomp.cli import main
from hochcomp.cohomology import Cochain, bar_hh_dims, complex_of, verify_center
from hochcomp.comparison import (verify_bar_squared, verify_F_chain_map, verify_G_chain_map,
                                 verify_GF_identity)
from hochcomp.corpus import corpus_names, corpus_text
from hochcomp.gerstenhaber import (bracket, check_arrow_hypothesis, cup, cup_even_fast,
                                   delta_action, delta_cochain)
from hochcomp.resolution import resolution, verify_ap_op, verify_complex, verify_sub_structure

RESULTS = []

CORPUS_KINDS = {
    "linear quiver with overlapping relations": ["linear4", "linear6"],
    "truncated cycle algebra kQ/F^m": ["truncated3_2", "truncated2_3"],
    "two-cycle quiver": ["twocycle"],
    "quiver with parallel arrows": ["parallel"],
}


def fresh(name):
    """A new algebra object, so no cache carries over between criteria."""
    return build_algebra(*parse_input(corpus_text(name)))


def cyclic(r):
    return fresh(f"cyclic{r}")


def record(number, title, ok, detail):
    RESULTS.append(f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
    assert ok, detail


def cyclic_generator(A, r, n):
    """``f_n``: the single ``AP_n`` generator ``(a1..ar)^{n-1} a1`` maps to ``a1``."""
    cycle = " ".join(f"a{i + 1}" for i in range(r))
    support = A.quiver.parse_path(" ".join([cycle] * (n - 1) + ["a1"]))
    w = resolution(A).element(support, n)
    assert n == 1 or resolution(A).ap(n) == [w]
    return Cochain(n, {w: {A.quiver.parse_path("a1"): 1}})


def test_criterion_1_cyclic_cohomology():
    problems = []
    timings = []
    for r in (2, 3, 4):
        start = time.perf_counter()
        A = cyclic(r)
        C = complex_of(A)
        dims = [C.dim_hh(n) for n in range(9)]
        rank1 = C.rank_d(1)
        zero = all(C.coboundary_matrix(n).is_zero() for n in range(2, 9))
        elapsed = time.perf_counter() - start
        timings.append(f"r={r} {elapsed:.3f}s")
        if dims != [2] + [1] * 8:
            problems.append(f"r={r} dims {dims}")
        if rank1 != 2 * r - 2:
            problems.append(f"r={r} rank d1 = {rank1}")
        if not zero:
            problems.append(f"r={r} some d^n != 0 for 2 <= n <= 8")
        if elapsed >= 5:
            problems.append(f"r={r} took {elapsed:.2f}s")
    record(1, "cyclic HH dims, rank d1 = 2r-2, d^n = 0", not problems,
           "; ".join(problems) or ", ".join(timings))


def expected_bracket_factor(n, m):
    if n % 2 and m % 2:
        return n - m
    if n % 2 == 0 and m % 2:
        return n - 1
    if n % 2 == 0 and m % 2 == 0:
        return 0
    # n odd, m even: graded antisymmetry of the (m, n) case
    return -(m - 1)


def test_criterion_2_cyclic_bracket_table():
    problems = []
    checked = 0
    for r in (2, 3, 4):
        A = cyclic(r)
        f = {n: cyclic_generator(A, r, n) for n in range(1, 10)}
        for n in range(1, 6):
            for m in range(1, 6):
                checked += 1
                want = f[n + m - 1].scaled(expected_bracket_factor(n, m), A)
                if not bracket(f[n], f[m], A).equals(want):
                    problems.append(f"r={r} [f{n}, f{m}]")
                if not cup(f[n], f[m], A).is_zero():
                    problems.append(f"r={r} f{n} u f{m} != 0")
    record(2, "cyclic bracket case table and vanishing cups", not problems,
           "; ".join(problems[:5]) or f"{checked} pairs exact for r = 2, 3, 4")


def test_criterion_3_comparison_morphisms(capsys):
    names = corpus_names()
    kinds_ok = len(names) >= 6 and all(
        all(x in names for x in group) for group in CORPUS_KINDS.values())
    problems = [] if kinds_ok else ["corpus is missing a required kind"]
    start = time.perf_counter()
    for name in names:
        A = fresh(name)
        for rep in (verify_F_chain_map(A, 6),
                    verify_G_chain_map(A, 6, max_total_length=10, samples=1000, seed=0),
                    verify_GF_identity(A, 6)):
            if not rep.ok:
                problems.append(f"{name} {rep.name}: {rep.failure}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        problems.append(f"took {elapsed:.1f}s")
    # exit-code contract: the CLI verify command succeeds on every corpus algebra
    for name in names:
        code = main(["verify", f"{name}.quiver", "--max-degree", "4", "--sample-budget", "100",
                     "--format", "json"])
        capsys.readouterr()
        if code != 0:
            problems.append(f"verify {name} exited {code}")
    record(3, "F, G chain maps and G o F = Id on the corpus", not problems,
           "; ".join(problems) or f"{len(names)} algebras in {elapsed:.1f}s, CLI exit 0")


def test_criterion_4_bar_oracle():
    problems = []
    used = []
    start = time.perf_counter()
    for name in corpus_names():
        A = fresh(name)
        if A.dim > 8:
            continue
        used.append(name)
        want = bar_hh_dims(A, 3)
        got = [complex_of(A).dim_hh(n) for n in range(4)]
        if got != [want[n] for n in range(4)]:
            problems.append(f"{name}: Bardzell {got}, bar {[want[n] for n in range(4)]}")
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        problems.append(f"took {elapsed:.1f}s")
    record(4, "HH^n dims agree with the bar complex for n <= 3", not problems,
           "; ".join(problems) or f"{len(used)} algebras with dim <= 8 in {elapsed:.1f}s")


def test_criterion_5_even_cup():
    problems = []
    checked = 0
    for name in corpus_names():
        A = fresh(name)
        C = complex_of(A)
        for n in (2, 4):
            for m in (2, 4):
                if n + m > 6:
                    continue
                for f in C.hh(n)[1]:
                    for g in C.hh(m)[1]:
                        checked += 1
                        if not cup_even_fast(f, g, A).equals(cup(f, g, A)):
                            problems.append(f"{name} ({n}, {m})")
    record(5, "fast even cup equals the transported cup", not problems,
           "; ".join(problems) or f"{checked} representative pairs")


def test_criterion_6_hh1_action():
    problems = []
    qualifying = []
    checked = 0
    for name in corpus_names():
        A = fresh(name)
        if check_arrow_hypothesis(A) is not None:
            continue
        qualifying.append(name)
        C = complex_of(A)
        for alpha in range(len(A.quiver.arrows)):
            d = delta_cochain(alpha, A)
            for n in range(1, 6):
                for f in C.hh(n)[1]:
                    checked += 1
                    if not delta_action(alpha, f, A).equals(bracket(d, f, A)):
                        problems.append(f"{name} arrow {A.quiver.labels[alpha]} degree {n}")
    if not any(complex_of(fresh(n)).dim_hh(k) for n in qualifying for k in range(1, 6)):
        problems.append("no qualifying algebra has a nonzero representative")
    record(6, "arrow-count formula equals [delta_alpha, f]", not problems,
           "; ".join(problems) or f"{checked} checks on {', '.join(qualifying)}")


def test_criterion_7_structural_invariants():
    problems = []
    for name in corpus_names():
        A = fresh(name)
        for rep in (verify_ap_op(A, 7), verify_sub_structure(A, 7), verify_complex(A, 7),
                    verify_bar_squared(A, 6, samples=500, seed=0), verify_center(A)):
            if not rep.ok:
                problems.append(f"{name} {rep.name}: {rep.failure}")
    record(7, "AP = AP^op, Sub structure, d^2 = 0, b^2 = 0, HH^0 = center", not problems,
           "; ".join(problems) or f"{len(corpus_names())} algebras")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
