"""Chains in the bar resolution over E = kQ_0.

A tensor ``a (x) v_1 (x) ... (x) v_n (x) b`` is a tuple of ``n + 2``
basis paths; a chain is a dict ``{tensor: coefficient}``.  Only basis
paths appear in the slots, so balancedness over ``E`` is automatic and
tensors with mismatched endpoints simply never occur.
"""

import random

from .resolution import clean_chain


def degree(tensor):
    return len(tensor) - 2


def is_well_concatenated(tensor):
    return all(p.target == q.source for p, q in zip(tensor, tensor[1:]))


def bar_differential(chain, A):
    """``b_n``: alternating sum of adjacent products, reduced in ``A``."""
    out = {}
    for t, c in chain.items():
        k = len(t)
        for i in range(k - 1):
            prod = A.mul(t[i], t[i + 1])
            if prod is None:
                continue
            key = t[:i] + (prod,) + t[i + 2:]
            out[key] = out.get(key, 0) + (c if i % 2 == 0 else -c)
    return clean_chain(out, A.field)


def act_paths(left, chain, right, A):
    """``left * chain * right`` for basis paths acting on the outer slots."""
    out = {}
    for t, c in chain.items():
        a = A.mul(left, t[0])
        if a is None:
            continue
        b = A.mul(t[-1], right)
        if b is None:
            continue
        key = (a,) + t[1:-1] + (b,)
        out[key] = out.get(key, 0) + c
    return clean_chain(out, A.field)


def act(a, chain, b, A):
    """Bimodule action of algebra elements ``a``, ``b`` on a bar chain."""
    out = {}
    for p, cp in a.items():
        for q, cq in b.items():
            for t, c in act_paths(p, chain, q, A).items():
                out[t] = out.get(t, 0) + cp * cq * c
    return clean_chain(out, A.field)


def add_into(acc, chain, scale=1):
    for k, v in chain.items():
        acc[k] = acc.get(k, 0) + scale * v
    return acc


def sequences(A, n, max_total_length=None, start=None):
    """All well-concatenated ``n``-sequences of basis paths.

    Sequences are yielded as tuples; with ``max_total_length`` only those
    whose lengths sum to at most that bound.
    """
    starts = A.quiver.vertices if start is None else [start]
    by_source = {}
    for p in A.basis:
        by_source.setdefault(p.source, []).append(p)

    def rec(prefix, vertex, budget):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for p in by_source.get(vertex, ()):
            if budget is not None and p.length > budget:
                continue
            prefix.append(p)
            yield from rec(prefix, p.target, None if budget is None else budget - p.length)
            prefix.pop()

    for x in starts:
        yield from rec([], x, max_total_length)


def random_sequence(A, n, rng, min_length=0):
    """A random well-concatenated ``n``-sequence (retries until the
    total length reaches ``min_length`` or a retry budget runs out)."""
    by_source = {}
    for p in A.basis:
        by_source.setdefault(p.source, []).append(p)
    best = None
    for _ in range(50):
        x = rng.randrange(A.quiver.num_vertices)
        seq = []
        for _ in range(n):
            p = rng.choice(by_source[x])
            seq.append(p)
            x = p.target
        total = sum(p.length for p in seq)
        if best is None or total > best[0]:
            best = (total, tuple(seq))
        if total >= min_length:
            break
    return best[1]


def unit_tensor(seq, A):
    """``1 (x) v_1 (x) ... (x) v_n (x) 1`` as a single tensor."""
    return (A.vertex(seq[0].source),) + tuple(seq) + (A.vertex(seq[-1].target),)


def random_chain(A, n, rng, terms=3):
    """A random bar chain of degree ``n`` with small integer coefficients."""
    by_target = {}
    by_source = {}
    for p in A.basis:
        by_target.setdefault(p.target, []).append(p)
        by_source.setdefault(p.source, []).append(p)
    out = {}
    for _ in range(terms):
        if n == 0:
            x = rng.randrange(A.quiver.num_vertices)
            mid = ()
            first, last = x, x
        else:
            mid = random_sequence(A, n, rng)
            first, last = mid[0].source, mid[-1].target
        a = rng.choice(by_target[first])
        b = rng.choice(by_source[last])
        t = (a,) + mid + (b,)
        out[t] = out.get(t, 0) + rng.choice([-2, -1, 1, 2, 3])
    return clean_chain(out, A.field)


def make_rng(seed):
    return random.Random(seed)
