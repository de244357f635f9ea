"""Cup product and Gerstenhaber bracket on Bardzell cochains.

Both products are computed on the bar complex and moved back and forth
with the comparison morphisms: a Bardzell cochain ``f`` becomes the bar
cochain ``f o G``, and a bar cochain ``h`` becomes ``h o F``.
"""

from dataclasses import dataclass, field

from .cohomology import Cochain, complex_of
from .comparison import comparison
from .resolution import Report, resolution


class HypothesisError(ValueError):
    """The algebra is outside the class a closed formula applies to."""


def evaluate(f, seq, A, vertex=None):
    """``(f o G)(1 (x) v_1 (x) ... (x) v_n (x) 1)`` as an algebra element."""
    if len(seq) != f.degree:
        raise ValueError(f"cochain of degree {f.degree} applied to {len(seq)} slots")
    out = {}
    for (L, w, R), c in comparison(A).G_unit(tuple(seq), vertex).items():
        for p, v in A.sandwich(L, f(w), R).items():
            out[p] = out.get(p, 0) + c * v
    return A.clean(out)


def _pull_back(A, degree, bar_cochain):
    """``h o F`` on every generator of ``AP_degree``.

    ``bar_cochain(tensor_middle, first, last)`` returns the value on
    ``1 (x) v_1 .. v_k (x) 1``; ``first``/``last`` are the vertices at the ends.
    """
    res = resolution(A)
    cmp_ = comparison(A)
    values = {}
    for w in res.ap(degree):
        acc = {}
        for t, c in cmp_.F(w).items():
            a, mid, b = t[0], t[1:-1], t[-1]
            inner = bar_cochain(mid, a.target, b.source)
            for p, v in A.sandwich(a, inner, b).items():
                acc[p] = acc.get(p, 0) + c * v
        acc = A.clean(acc)
        if acc:
            values[w] = acc
    return Cochain(degree, values)


def cup(f, g, A):
    """``f u g = F(G(f) u G(g))`` of degree ``n + m``."""
    n, m = f.degree, g.degree

    def h(mid, first, last):
        left, right = mid[:n], mid[n:]
        split = left[-1].target if left else first
        return A.multiply(evaluate(f, left, A, split), evaluate(g, right, A, split))

    return _pull_back(A, n + m, h)


def circ_i(f, g, i, A):
    """``f o_i g = F(G(f) o_i G(g))`` of degree ``n + m - 1``, ``1 <= i <= n``."""
    n, m = f.degree, g.degree
    if n < 1 or m < 1:
        raise ValueError("circ_i needs degrees n, m >= 1")
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} out of range 1..{n}")

    def h(mid, first, last):
        before, window, after = mid[:i - 1], mid[i - 1:i - 1 + m], mid[i - 1 + m:]
        out = {}
        for p, c in evaluate(g, window, A).items():
            for q, v in evaluate(f, before + (p,) + after, A).items():
                out[q] = out.get(q, 0) + c * v
        return A.clean(out)

    return _pull_back(A, n + m - 1, h)


def circ(f, g, A):
    """``f o g = sum_i (-1)^{(i-1)(m-1)} f o_i g``."""
    n, m = f.degree, g.degree
    total = Cochain(n + m - 1)
    for i in range(1, n + 1):
        total = total.plus(circ_i(f, g, i, A), A, (-1) ** ((i - 1) * (m - 1)))
    return total


def bracket(f, g, A):
    """``[f, g] = f o g - (-1)^{(n-1)(m-1)} g o f``."""
    n, m = f.degree, g.degree
    if n < 1 or m < 1:
        raise ValueError("bracket is defined here for degrees n, m >= 1")
    return circ(f, g, A).plus(circ(g, f, A), A, -((-1) ** ((n - 1) * (m - 1))))


def cup_even_fast(f, g, A):
    """Cup of two even-degree cochains read off one factorization of each
    support: ``f(prefix) * a * g(suffix)``.

    The prefix is covered by the first ``2n - 1`` relations of the left
    chain, the suffix by the last ``2m - 1`` relations of the op chain.
    """
    n2, m2 = f.degree, g.degree
    if n2 % 2 or m2 % 2 or n2 < 2 or m2 < 2:
        raise ValueError("cup_even_fast needs even degrees >= 2")
    res = resolution(A)
    Q = A.quiver
    values = {}
    for w in res.ap(n2 + m2):
        p = w.support
        cut = w.chain[n2 - 2][1]
        start = w.op_chain[n2][0]
        if cut > start:
            raise AssertionError(f"prefix and suffix overlap in {res.label(w)}")
        prefix = res.element(Q.subpath(p, 0, cut), n2)
        suffix = res.element(Q.subpath(p, start, p.length), m2)
        if prefix is None or suffix is None:
            raise AssertionError(f"factorization failed for {res.label(w)}")
        middle = Q.subpath(p, cut, start)
        val = {}
        for x, c in f(prefix).items():
            for y, d in g(suffix).items():
                r = A.mul3(x, middle, y)
                if r is not None:
                    val[r] = val.get(r, 0) + c * d
        val = A.clean(val)
        if val:
            values[w] = val
    return Cochain(n2 + m2, values)


# the HH^1 action of arrow derivations


def arrow_count(alpha, p):
    return sum(1 for a in p.arrows if a == alpha)


def delta_cochain(alpha, A):
    """Degree-1 cochain sending the arrow ``alpha`` to itself, others to 0."""
    res = resolution(A)
    arrow = A.quiver.arrow(alpha)
    return Cochain(1, {res.element(arrow, 1): A.element(arrow)})


def check_arrow_hypothesis(A):
    """Offending ``(i, j, dim e_i A e_j)`` for arrows ``i -> j``, or None."""
    Q = A.quiver
    for a in range(len(Q.arrows)):
        i, j = Q.source[a], Q.target[a]
        d = len(A.paths_between(i, j))
        if d != 1:
            return (i, j, d)
    return None


def delta_action(alpha, f, A, strict=True):
    """``[delta_alpha, f]`` by arrow counting:
    ``w -> (C(alpha, f(w)) - C(alpha, w)) f(w)``.

    With ``strict`` the algebra must have ``dim e_i A e_j = 1`` for every
    arrow ``i -> j``; outside that class the formula still computes the
    bracket with ``delta_alpha`` but ``delta_alpha`` need not span ``HH^1``.
    """
    if f.degree < 1:
        raise ValueError("delta_action needs degree >= 1")
    if strict:
        bad = check_arrow_hypothesis(A)
        if bad is not None:
            i, j, d = bad
            raise HypothesisError(
                f"dim e_{i + 1} A e_{j + 1} = {d}, expected 1 for an arrow {i + 1} -> {j + 1}")
    values = {}
    for w, x in f.values.items():
        cw = arrow_count(alpha, w.support)
        val = A.clean({p: (arrow_count(alpha, p) - cw) * c for p, c in x.items()})
        if val:
            values[w] = val
    return Cochain(f.degree, values)


# class-level tables


@dataclass
class ProductTable:
    """Products of ``HH^n`` and ``HH^m`` generators as class coordinates."""

    operation: str
    degrees: tuple
    target_degree: int
    entries: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "operation": self.operation,
            "degrees": list(self.degrees),
            "target_degree": self.target_degree,
            "entries": [{"left": k[0], "right": k[1], "coordinates": v}
                        for k, v in self.entries.items()],
        }


def generator_label(n, k):
    return f"HH{n}.{k + 1}"


_OPERATIONS = {"cup": (cup, 0), "bracket": (bracket, 1)}


def product_table(A, operation, n, m):
    """Table of ``operation`` on ``HH^n x HH^m`` generator pairs."""
    op, shift = _OPERATIONS[operation]
    target = n + m - shift
    C = complex_of(A)
    table = ProductTable(operation, (n, m), target)
    _, left = C.hh(n)
    _, right = C.hh(m)
    for i, f in enumerate(left):
        for j, g in enumerate(right):
            coords = C.class_coordinates(op(f, g, A))
            table.entries[generator_label(n, i), generator_label(m, j)] = \
                [A.field.format(c) for c in coords]
    return table


def product_tables(A, max_degree, operations=("cup", "bracket")):
    """Tables for every degree pair whose product lands in degree
    ``<= max_degree`` (cup from degree 0, bracket from degree 1)."""
    tables = []
    for name in operations:
        low = _OPERATIONS[name][1]
        for n in range(low, max_degree + 1):
            for m in range(low, max_degree + 1 + low - n):
                tables.append(product_table(A, name, n, m))
    return tables


# verification suites


def _pairs(C, max_total, low=0):
    for n in range(low, max_total + 1):
        for m in range(low, max_total + 1 - n):
            for f in C.hh(n)[1]:
                for g in C.hh(m)[1]:
                    yield n, m, f, g


def verify_even_cup(A, max_degree=6):
    """``cup_even_fast == cup`` on even representative pairs."""
    rep = Report("even_cup")
    C = complex_of(A)
    for n, m, f, g in _pairs(C, max_degree, low=2):
        if n % 2 or m % 2:
            continue
        rep.checked += 1
        if not cup_even_fast(f, g, A).equals(cup(f, g, A)):
            rep.fail(f"fast cup differs in degrees ({n}, {m})")
            break
    return rep


def verify_product_closure(A, max_degree=6):
    """Cups and brackets of cocycles are cocycles."""
    rep = Report("product_closure")
    C = complex_of(A)
    for n, m, f, g in _pairs(C, max_degree):
        rep.checked += 1
        if not C.is_cocycle(cup(f, g, A)):
            rep.fail(f"cup of degrees ({n}, {m}) is not a cocycle")
            return rep
        if n >= 1 and m >= 1 and n + m - 1 <= max_degree:
            rep.checked += 1
            if not C.is_cocycle(bracket(f, g, A)):
                rep.fail(f"bracket of degrees ({n}, {m}) is not a cocycle")
                return rep
    return rep


def verify_graded_commutativity(A, max_degree=6):
    """``f u g - (-1)^{nm} g u f`` is a coboundary."""
    rep = Report("cup_graded_commutative")
    C = complex_of(A)
    for n, m, f, g in _pairs(C, max_degree):
        rep.checked += 1
        diff = cup(f, g, A).plus(cup(g, f, A), A, -((-1) ** (n * m)))
        if not C.is_coboundary(diff):
            rep.fail(f"cup not graded commutative in degrees ({n}, {m})")
            break
    return rep


def verify_delta_action(A, max_degree=5):
    """Arrow counting agrees with the bracket against ``delta_alpha``.

    Skipped (reported ok with ``skipped``) outside the algebras with
    ``dim e_i A e_j = 1`` for all arrows ``i -> j``.
    """
    rep = Report("delta_action")
    bad = check_arrow_hypothesis(A)
    if bad is not None:
        rep.details = {"skipped": "dim e_%d A e_%d = %d" % (bad[0] + 1, bad[1] + 1, bad[2])}
        return rep
    C = complex_of(A)
    for alpha in range(len(A.quiver.arrows)):
        d = delta_cochain(alpha, A)
        for n in range(1, max_degree + 1):
            for f in C.hh(n)[1]:
                rep.checked += 1
                if not delta_action(alpha, f, A).equals(bracket(d, f, A)):
                    rep.fail(f"arrow {A.quiver.labels[alpha]!r}, degree {n}")
                    return rep
    return rep
