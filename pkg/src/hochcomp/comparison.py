"""Comparison morphisms F: Ap A -> Bar A and G: Bar A -> Ap A.

Both are A^e-linear, so they are stored on generators: ``F(w)`` for
``w`` in ``AP_n`` and ``G`` on ``1 (x) v_1 (x) ... (x) v_n (x) 1``.  The
values are memoised per algebra; F is re-entered constantly by the
cup and bracket evaluations.
"""

from dataclasses import dataclass

from . import bar
from .algebra import compose_all
from .resolution import Report, clean_chain, greedy_chain, resolution


@dataclass(frozen=True)
class SequenceClass:
    m_odd: frozenset
    m_even: frozenset
    good: bool


@dataclass(frozen=True)
class ChiEntry:
    """An ``AP_n`` element positioned inside ``T = v_1 ... v_n``."""

    element: object
    offset: int
    left: object
    right: object


class Comparison:
    def __init__(self, A):
        self.A = A
        self.Q = A.quiver
        self.res = resolution(A)
        self._F = {}
        self._G = {}

    # F

    def F(self, w):
        """``F_n(1 (x) w (x) 1)`` as a bar chain."""
        try:
            return self._F[w]
        except KeyError:
            pass
        A, Q = self.A, self.Q
        n = w.degree
        if n == 0:
            out = {(w.support, w.support): 1}
        elif n == 1:
            out = {(Q.vertex(w.source), w.support, Q.vertex(w.target)): 1}
        else:
            out = {}
            e = Q.vertex(w.source)
            for entry in self.res.sub(w)[1:]:
                for t, c in self.F(entry.child).items():
                    left = A.mul(entry.left, t[0])
                    if left is None:
                        continue
                    right = A.mul(t[-1], entry.right)
                    if right is None:
                        continue
                    key = (e, left) + t[1:-1] + (right,)
                    out[key] = out.get(key, 0) + c
            out = clean_chain(out)
        self._F[w] = out
        return out

    def F_chain(self, chain):
        """Apply F to a chain ``{(L, w, R): c}`` of Bardzell's resolution."""
        out = {}
        for (L, w, R), c in chain.items():
            bar.add_into(out, bar.act_paths(L, self.F(w), R, self.A), c)
        return clean_chain(out, self.A.field)

    # G

    def classify(self, seq):
        return classify(self.A, seq)

    def chi(self, seq):
        """Positioned ``AP_n`` elements dividing ``v_1 ... v_n``."""
        n = len(seq)
        T = compose_all(seq)
        return self._chi(T, n)

    def _chi(self, T, n, stop=None):
        A, Q, res = self.A, self.Q, self.res
        arrows = T.arrows
        ell = len(arrows)
        out = []
        for o in range(ell if stop is None else min(stop, ell)):
            if n == 1:
                end = o + 1
            else:
                c = greedy_chain(A, arrows, o, n - 1)
                if c is None:
                    continue
                end = c[-1][1]
            w = res.element(Q.subpath(T, o, end), n)
            out.append(ChiEntry(w, o, Q.subpath(T, 0, o), Q.subpath(T, end, ell)))
        return out

    def G_unit(self, seq, vertex=None):
        """``G_n(1 (x) v_1 (x) ... (x) v_n (x) 1)`` as a Bardzell chain.

        For ``n = 0`` the tensor ``e_x (x) e_x`` needs ``vertex = x``.
        """
        if not seq:
            e = self.Q.vertex(vertex)
            return {(e, self.res.element(e, 0), e): 1}
        try:
            return self._G[seq]
        except KeyError:
            pass
        A = self.A
        n = len(seq)
        out = {}
        if n == 1:
            v = seq[0]
            for i in range(v.length):
                a = self.res.element(self.Q.arrow(v.arrows[i]), 1)
                out[(self.Q.subpath(v, 0, i), a, self.Q.subpath(v, i + 1, v.length))] = 1
        elif classify(A, seq).good:
            T = compose_all(seq)
            if n % 2 == 0:
                entries = self._chi_first(T, n)
            else:
                entries = self._chi(T, n, stop=seq[0].length)
            for x in entries:
                if A.is_basis(x.left) and A.is_basis(x.right):
                    out[(x.left, x.element, x.right)] = 1
        self._G[seq] = out
        return out

    def _chi_first(self, T, n):
        """The ``chi`` entry of least offset, as a 0/1-element list."""
        A, Q, res = self.A, self.Q, self.res
        arrows = T.arrows
        for o in range(len(arrows)):
            c = greedy_chain(A, arrows, o, n - 1)
            if c is None:
                continue
            end = c[-1][1]
            w = res.element(Q.subpath(T, o, end), n)
            return [ChiEntry(w, o, Q.subpath(T, 0, o), Q.subpath(T, end, len(arrows)))]
        return []

    def G(self, tensor):
        """G on a single bar tensor ``(a, v_1, ..., v_n, b)``."""
        a, b = tensor[0], tensor[-1]
        core = self.G_unit(tensor[1:-1], vertex=a.target)
        A = self.A
        out = {}
        for (L, w, R), c in core.items():
            left = A.mul(a, L)
            if left is None:
                continue
            right = A.mul(R, b)
            if right is None:
                continue
            key = (left, w, right)
            out[key] = out.get(key, 0) + c
        return out

    def G_chain(self, chain):
        out = {}
        for t, c in chain.items():
            for k, v in self.G(t).items():
                out[k] = out.get(k, 0) + c * v
        return clean_chain(out, self.A.field)

    # structure of F

    def F_expansion_shape(self, w):
        """Split ``F(w)`` into the terms with non-trivial right slot and
        the principal term ``1 (x) L(psi_1) (x) ... (x) L(psi_{n-1}) (x) psi_{n-1} (x) 1``.

        ``psi_1`` is the divisor of ``w`` that is a suffix, ``psi_{i+1}``
        the suffix divisor of ``psi_i``.
        """
        if w.degree < 2:
            raise ValueError("degree must be >= 2")
        Q = self.Q
        lefts = []
        psi = w
        while psi.degree >= 2:
            last = self.res.sub(psi)[-1]
            if last.right.length:
                raise AssertionError(f"last divisor of {self.res.label(psi)} is not a suffix")
            lefts.append(last.left)
            psi = last.child
        principal = (Q.vertex(w.source),) + tuple(lefts) + (psi.support, Q.vertex(w.target))
        chain = self.F(w)
        if chain.get(principal) != 1:
            raise AssertionError(f"principal term missing from F({self.res.label(w)})")
        k_terms = {t: c for t, c in chain.items() if t != principal}
        for t in k_terms:
            if t[-1].length == 0:
                raise AssertionError(f"term with trivial right slot in K-part of F({self.res.label(w)})")
        return k_terms, principal


def classify(A, seq):
    """Good/bad classification of a well-concatenated sequence."""
    n = len(seq)
    m_odd = frozenset(j for j in range(1, n // 2 + 1)
                      if A.mul(seq[2 * j - 2], seq[2 * j - 1]) is not None)
    m_even = frozenset(j for j in range(1, (n - 1) // 2 + 1)
                       if A.mul(seq[2 * j - 1], seq[2 * j]) is not None)
    good = (n % 2 == 0 and not m_odd) or (n % 2 == 1 and not m_even)
    return SequenceClass(m_odd, m_even, good)


def comparison(A):
    c = A._cache.get("comparison")
    if c is None:
        c = A._cache["comparison"] = Comparison(A)
    return c


def F(A, w):
    return comparison(A).F(w)


def G(A, tensor):
    return comparison(A).G(tensor)


def chi(A, seq):
    return comparison(A).chi(seq)


def F_expansion_shape(A, w):
    return comparison(A).F_expansion_shape(w)


# verification suites

def verify_F_chain_map(A, max_degree):
    """``b_n F_n = F_{n-1} d_n`` on every generator of degree ``<= max_degree``."""
    cmp = comparison(A)
    res = cmp.res
    rep = Report("F_chain_map")
    for w in res.ap(0):
        rep.checked += 1
        # augmentations agree: eps F_0 = mu
        t, = cmp.F(w)
        if A.mul(t[0], t[1]) != w.support:
            rep.fail(f"eps F_0({res.label(w)}) != e")
            return rep
    for n in range(1, max_degree + 1):
        for w in res.ap(n):
            rep.checked += 1
            lhs = bar.bar_differential(cmp.F(w), A)
            rhs = cmp.F_chain(res.d(w))
            if lhs != rhs:
                rep.fail(f"b_{n} F_{n} != F_{n - 1} d_{n} on {res.label(w)}")
                return rep
    return rep


def _check_G_square(cmp, seq, rep):
    A, res = cmp.A, cmp.res
    t = bar.unit_tensor(seq, A)
    lhs = res.apply_d(cmp.G(t))
    rhs = cmp.G_chain(bar.bar_differential({t: 1}, A))
    if lhs != rhs:
        labels = " | ".join(A.label(v) for v in seq)
        rep.fail(f"d_{len(seq)} G_{len(seq)} != G_{len(seq) - 1} b_{len(seq)} on ({labels})")
        return False
    return True


def verify_G_chain_map(A, max_degree, max_total_length=10, samples=1000, seed=0):
    """``d_n G_n = G_{n-1} b_n`` exhaustively on short tensors plus random ones."""
    cmp = comparison(A)
    rep = Report("G_chain_map")
    exhaustive = 0
    for n in range(1, max_degree + 1):
        for seq in bar.sequences(A, n, max_total_length):
            rep.checked += 1
            exhaustive += 1
            if not _check_G_square(cmp, seq, rep):
                return rep
    rng = bar.make_rng(seed)
    for _ in range(samples):
        n = rng.randint(1, max_degree)
        seq = bar.random_sequence(A, n, rng, min_length=max_total_length + 1)
        rep.checked += 1
        if not _check_G_square(cmp, seq, rep):
            return rep
    rep.details = {"exhaustive": exhaustive, "random": samples}
    return rep


def verify_GF_identity(A, max_degree):
    """``G_n F_n = id`` on every generator of degree ``<= max_degree``."""
    cmp = comparison(A)
    res = cmp.res
    rep = Report("GF_identity")
    Q = A.quiver
    for n in range(0, max_degree + 1):
        for w in res.ap(n):
            rep.checked += 1
            got = cmp.G_chain(cmp.F(w))
            want = {(Q.vertex(w.source), w, Q.vertex(w.target)): 1}
            if got != want:
                rep.fail(f"G_{n} F_{n} != id on {res.label(w)}")
                return rep
    return rep


def kernel_conditions(A, seq):
    """Which of the three vanishing conditions for ``G_n`` hold on ``seq``."""
    cmp = comparison(A)
    n = len(seq)
    cls = classify(A, seq)
    if not cls.good:
        return (True, False, False)
    entries = cmp.chi(seq)
    if not entries:
        return (False, True, False)
    if n % 2 == 0:
        considered = entries[:1]
    else:
        considered = [x for x in entries if x.offset < seq[0].length]
    killed = all(not (A.is_basis(x.left) and A.is_basis(x.right)) for x in considered)
    return (False, False, killed)


def verify_kernel_characterization(A, max_degree, max_total_length=10, samples=1000, seed=0):
    """``G_n(t) = 0`` iff exactly one vanishing condition holds."""
    cmp = comparison(A)
    rep = Report("G_kernel")
    rng = bar.make_rng(seed + 1)

    def seqs():
        for n in range(2, max_degree + 1):
            yield from bar.sequences(A, n, max_total_length)
        for _ in range(samples):
            n = rng.randint(2, max(2, max_degree))
            yield bar.random_sequence(A, n, rng, min_length=max_total_length + 1)

    for seq in seqs():
        rep.checked += 1
        zero = not cmp.G_unit(seq)
        conds = kernel_conditions(A, seq)
        if zero != (sum(conds) == 1):
            labels = " | ".join(A.label(v) for v in seq)
            rep.fail(f"kernel characterization fails on ({labels})")
            return rep
    return rep


def verify_bar_squared(A, max_degree, samples=500, seed=0):
    """``b b = 0`` on random bar chains."""
    rep = Report("b_squared")
    rng = bar.make_rng(seed + 2)
    for _ in range(samples):
        n = rng.randint(2, max(2, max_degree))
        c = bar.random_chain(A, n, rng)
        rep.checked += 1
        if bar.bar_differential(bar.bar_differential(c, A), A):
            rep.fail(f"b b != 0 on a random chain of degree {n}")
            return rep
    return rep
