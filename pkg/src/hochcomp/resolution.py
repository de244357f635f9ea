"""Bardzell's minimal bimodule resolution of a monomial algebra.

Generators in degree ``n`` are the supports of ``n``-concatenations,
``AP_n``.  An element is identified by its degree and support path: the
greedy left chain of a support is determined by the support itself, so
two concatenations with the same support are the same generator.

Chains in ``A (x) kAP_n (x) A`` are dicts ``{(L, w, R): coefficient}``
with ``L``, ``R`` basis paths.
"""

from dataclasses import dataclass, field

from .quiver import Path, sort_key


@dataclass(frozen=True)
class APElement:
    """An element of ``AP_n``.

    ``chain`` holds the left concatenation ``p_1..p_{n-1}`` and
    ``op_chain`` the op-concatenation ``q^1..q^{n-1}``, both as
    ``(start, end)`` offsets into ``support`` ordered by start.
    """

    degree: int
    support: Path
    chain: tuple = field(default=(), compare=False)
    op_chain: tuple = field(default=(), compare=False)

    @property
    def source(self):
        return self.support.source

    @property
    def target(self):
        return self.support.target

    @property
    def length(self):
        return len(self.support.arrows)


def ap_sort_key(w):
    return (w.degree,) + sort_key(w.support)


@dataclass(frozen=True)
class SubEntry:
    """``child`` dividing its parent as ``parent = left * child * right``."""

    child: APElement
    offset: int
    left: Path
    right: Path


class ResolutionError(AssertionError):
    pass


def greedy_chain(A, arrows, start, count):
    """The left concatenation of ``count`` relations starting at ``start``.

    Relations are searched inside the ambient ``arrows``.  Returns a
    tuple of ``(start, end)`` pairs, or None if the chain stops early.
    """
    end = A.relation_end(arrows, start)
    if end is None:
        return None
    chain = [(start, end)]
    while len(chain) < count:
        lo = chain[-2][1] if len(chain) >= 2 else chain[-1][0] + 1
        hi = chain[-1][1]
        for s in range(lo, hi):
            e = A.relation_end(arrows, s)
            if e is not None:
                chain.append((s, e))
                break
        else:
            return None
    return tuple(chain)


def op_chain(A, arrows):
    """The op-concatenation covering all of ``arrows``, built right to left.

    Each new relation has maximal end in its window.  Returns the chain
    ordered by start offset, or None if it does not close at offset 0.
    """
    n = len(arrows)
    s = A.relation_start(arrows, n)
    if s is None:
        return None
    chain = [(s, n)]
    while chain[-1][0] > 0:
        lo = chain[-1][0]
        hi = chain[-2][0] if len(chain) >= 2 else chain[-1][1] - 1
        for t in range(hi, lo, -1):
            q = A.relation_start(arrows, t)
            if q is not None:
                chain.append((q, t))
                break
        else:
            return None
    chain.reverse()
    return tuple(chain)


class BardzellResolution:
    """Lazy tables for ``AP_n``, ``Sub`` and the differentials ``d_n``."""

    def __init__(self, A):
        self.A = A
        self.Q = A.quiver
        self._ap = {}
        self._elements = {}
        self._ext_memo = {}
        self._sub = {}
        self._d = {}

    # elements

    def element(self, support, degree):
        """The ``AP_degree`` element with this support, or None."""
        key = (degree, support)
        try:
            return self._elements[key]
        except KeyError:
            pass
        w = self._make(support, degree)
        self._elements[key] = w
        return w

    def _make(self, support, degree):
        n = support.length
        if degree == 0:
            return APElement(0, support) if n == 0 else None
        if degree == 1:
            return APElement(1, support) if n == 1 else None
        arrows = support.arrows
        chain = greedy_chain(self.A, arrows, 0, degree - 1)
        if chain is None or chain[-1][1] != n:
            return None
        op = op_chain(self.A, arrows)
        if op is None or len(op) != degree - 1:
            raise ResolutionError(
                f"op-concatenation of {self.Q.label(support)!r} does not match degree {degree}")
        return APElement(degree, support, chain, op)

    def ap(self, n):
        """``AP_n`` in deterministic order."""
        try:
            return self._ap[n]
        except KeyError:
            pass
        A, Q = self.A, self.Q
        if n == 0:
            out = [self.element(Q.vertex(x), 0) for x in Q.vertices]
        elif n == 1:
            out = [self.element(Q.arrow(a), 1) for a in range(len(Q.arrows))]
        elif n == 2:
            out = [self.element(r, 2) for r in A.relations]
        else:
            found = {}
            for w in self.ap(n - 1):
                for ext in self._extensions(w):
                    arrows = w.support.arrows + ext
                    p = Path(w.source, Q.target[arrows[-1]], arrows)
                    e = self.element(p, n)
                    if e is None:
                        raise ResolutionError(
                            f"extension {Q.label(p)!r} is not a {n}-concatenation support")
                    found[p] = e
            out = list(found.values())
        out.sort(key=ap_sort_key)
        self._ap[n] = out
        return out

    def _extensions(self, w):
        """Right extensions of ``w in AP_{n-1}`` to supports in ``AP_n``."""
        chain = w.chain
        lo = chain[-2][1] if len(chain) >= 2 else 1
        arrows = w.support.arrows
        tail = arrows[lo:]
        try:
            return self._ext_memo[tail]
        except KeyError:
            pass
        A = self.A
        hi = len(tail)
        out = []
        for s in range(hi):
            overlap = tail[s:]
            for r in A.relations:
                ra = r.arrows
                if len(ra) <= len(overlap) or ra[:len(overlap)] != overlap:
                    continue
                ext = ra[len(overlap):]
                candidate = tail + ext
                if any(A.relation_end(candidate, s2) is not None for s2 in range(s)):
                    continue
                out.append(ext)
        self._ext_memo[tail] = out
        return out

    # Sub and differentials

    def sub(self, w):
        """``Sub(w)`` as :class:`SubEntry` list ordered by offset."""
        try:
            return self._sub[w]
        except KeyError:
            pass
        Q = self.Q
        p = w.support
        n = w.degree
        ell = p.length
        out = []
        if n == 1:
            pairs = [(0, 0), (1, 1)]
        elif n == 2:
            pairs = [(i, i + 1) for i in range(ell)]
        else:
            pairs = []
            for o in range(ell):
                c = greedy_chain(self.A, p.arrows, o, n - 2)
                if c is not None:
                    pairs.append((o, c[-1][1]))
        for o, e in pairs:
            child = self.element(Q.subpath(p, o, e), n - 1)
            if child is None:
                raise ResolutionError(f"bad divisor at offset {o} of {Q.label(p)!r}")
            out.append(SubEntry(child, o, Q.subpath(p, 0, o), Q.subpath(p, e, ell)))
        if n >= 1 and n % 2 == 1 and len(out) != 2:
            raise ResolutionError(
                f"odd-degree element {Q.label(p)!r} has {len(out)} divisors, expected 2")
        self._sub[w] = out
        return out

    def differential_terms(self, w):
        """``d_n(1 (x) w (x) 1)`` as raw ``(coefficient, L, child, R)`` terms.

        ``L`` and ``R`` are subpaths of the support and may lie in ``I``.
        """
        n = w.degree
        if n == 0:
            return []
        subs = self.sub(w)
        if n % 2 == 0:
            return [(1, s.left, s.child, s.right) for s in subs]
        first, last = subs
        return [(1, last.left, last.child, last.right),
                (-1, first.left, first.child, first.right)]

    def d(self, w):
        """``d_n(1 (x) w (x) 1)`` with ``I``-killed terms dropped."""
        try:
            return self._d[w]
        except KeyError:
            pass
        A = self.A
        out = {}
        for c, L, child, R in self.differential_terms(w):
            if A.is_basis(L) and A.is_basis(R):
                key = (L, child, R)
                out[key] = out.get(key, 0) + c
        out = {k: v for k, v in out.items() if v}
        self._d[w] = out
        return out

    def apply_d(self, chain):
        """Apply ``d`` to a chain in ``A (x) kAP_n (x) A``."""
        A = self.A
        out = {}
        for (L, w, R), c in chain.items():
            for (L2, child, R2), c2 in self.d(w).items():
                left = A.mul(L, L2)
                if left is None:
                    continue
                right = A.mul(R2, R)
                if right is None:
                    continue
                key = (left, child, right)
                out[key] = out.get(key, 0) + c * c2
        return clean_chain(out, A.field)

    def augment(self, chain):
        """``mu``: ``A (x) kQ_0 (x) A -> A``."""
        A = self.A
        out = {}
        for (L, e, R), c in chain.items():
            p = A.mul(L, R)
            if p is not None:
                out[p] = out.get(p, 0) + c
        return A.clean(out)

    def label(self, w):
        return self.Q.label(w.support)


def clean_chain(chain, field=None):
    if field is None:
        return {k: v for k, v in chain.items() if v}
    out = {}
    for k, v in chain.items():
        v = field.reduce(v)
        if not field.is_zero(v):
            out[k] = v
    return out


def resolution(A):
    """The (cached) Bardzell resolution of ``A``."""
    r = A._cache.get("resolution")
    if r is None:
        r = A._cache["resolution"] = BardzellResolution(A)
    return r


def enumerate_ap(A, n):
    return resolution(A).ap(n)


def sub(A, w):
    return resolution(A).sub(w)


def differential_d(A, w):
    return resolution(A).d(w)


@dataclass
class Report:
    """Outcome of a verification suite."""

    name: str
    ok: bool = True
    checked: int = 0
    failure: str = ""
    details: dict = field(default_factory=dict)

    def fail(self, message):
        if self.ok:
            self.ok = False
            self.failure = message

    def as_dict(self):
        d = {"name": self.name, "ok": self.ok, "checked": self.checked}
        if self.failure:
            d["failure"] = self.failure
        if self.details:
            d["details"] = self.details
        return d


def verify_complex(A, max_degree):
    """Check ``mu d_1 = 0`` and ``d_{n-1} d_n = 0`` for ``n <= max_degree``."""
    res = resolution(A)
    rep = Report("d_squared")
    for w in res.ap(1):
        rep.checked += 1
        if res.augment(res.d(w)):
            rep.fail(f"mu d_1({res.label(w)}) != 0")
            return rep
    for n in range(2, max_degree + 1):
        for w in res.ap(n):
            rep.checked += 1
            out = res.apply_d(res.d(w))
            if out:
                rep.fail(f"d_{n - 1} d_{n}({res.label(w)}) = {len(out)} nonzero terms")
                return rep
    return rep


def verify_ap_op(A, max_degree):
    """Left and op constructions agree on every support (AP_n = AP_n^op)."""
    res = resolution(A)
    rep = Report("ap_equals_ap_op")
    for n in range(2, max_degree + 1):
        for w in res.ap(n):
            rep.checked += 1
            op = op_chain(A, w.support.arrows)
            if op is None or len(op) != n - 1 or op[0][0] != 0 or op[-1][1] != w.length:
                rep.fail(f"op chain mismatch on {res.label(w)}")
                return rep
    return rep


def verify_sub_structure(A, max_degree):
    """|Sub(w)| = 2 in odd degrees and consecutive divisors overlap.

    For ``Sub(w) = {z_1..z_m}`` in even degree and ``Sub(z_i) =
    {psi_1^i, psi_2^i}``, the occurrence of ``psi_2^i`` inside ``w``
    coincides with that of ``psi_1^{i+1}``.
    """
    res = resolution(A)
    rep = Report("sub_structure")
    for n in range(1, max_degree + 1):
        for w in res.ap(n):
            rep.checked += 1
            subs = res.sub(w)
            if n % 2 == 1:
                if len(subs) != 2:
                    rep.fail(f"|Sub({res.label(w)})| = {len(subs)}")
                    return rep
                continue
            for z1, z2 in zip(subs, subs[1:]):
                a = res.sub(z1.child)[1]
                b = res.sub(z2.child)[0]
                if a.child != b.child or z1.offset + a.offset != z2.offset + b.offset:
                    rep.fail(f"overlap fails in Sub({res.label(w)}) at offset {z1.offset}")
                    return rep
    return rep
