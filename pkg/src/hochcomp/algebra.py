"""Monomial algebras A = kQ/I with I generated by paths.

Algebra elements are plain dicts ``{Path: coefficient}`` over the basis
of relation-free paths, with no zero coefficients stored.
"""

from collections import defaultdict

from .fields import RATIONALS
from .quiver import Path, compose, sort_key


class AlgebraError(ValueError):
    pass


DEFAULT_CAP = 64


class MonomialAlgebra:
    """``kQ/<R>`` for a minimal set ``R`` of paths of length >= 2.

    Build instances with :func:`build_algebra`, which validates ``R`` and
    enumerates the finite basis.
    """

    def __init__(self, quiver, relations, field, basis):
        self.quiver = quiver
        self.relations = list(relations)
        self.field = field
        self.basis = list(basis)
        self._basis_arrows = frozenset(p.arrows for p in self.basis if p.arrows)
        self._relation_set = frozenset(r.arrows for r in self.relations)
        self._relation_lengths = sorted({r.length for r in self.relations})
        self._by_endpoints = defaultdict(list)
        for p in self.basis:
            self._by_endpoints[p.source, p.target].append(p)
        self._cache = {}

    def __repr__(self):
        rels = ", ".join(self.quiver.label(r).replace(" ", "") for r in self.relations)
        return f"<MonomialAlgebra dim={self.dim} R={{{rels}}} over {self.field.descriptor}>"

    @property
    def dim(self):
        return len(self.basis)

    def label(self, p):
        return self.quiver.label(p)

    def vertex(self, x):
        return Path(x, x, ())

    # membership

    def is_basis(self, p):
        return not p.arrows or p.arrows in self._basis_arrows

    def in_ideal(self, p):
        """True iff some relation occurs as a factor of ``p``."""
        a = p.arrows
        rel = self._relation_set
        for k in self._relation_lengths:
            for i in range(len(a) - k + 1):
                if a[i:i + k] in rel:
                    return True
        return False

    def relation_end(self, arrows, start, stop=None):
        """End offset of the relation starting at ``start`` inside ``arrows[:stop]``.

        By minimality of ``R`` at most one relation starts at a given offset.
        """
        if stop is None:
            stop = len(arrows)
        rel = self._relation_set
        for k in self._relation_lengths:
            end = start + k
            if end > stop:
                break
            if arrows[start:end] in rel:
                return end
        return None

    def relation_start(self, arrows, end, start=0):
        """Start offset of the relation ending at ``end`` inside ``arrows[start:]``."""
        rel = self._relation_set
        for k in self._relation_lengths:
            s = end - k
            if s < start:
                break
            if arrows[s:end] in rel:
                return s
        return None

    def paths_between(self, i, j):
        """Basis paths from vertex ``i`` to vertex ``j``, in basis order."""
        return self._by_endpoints.get((i, j), [])

    # products

    def mul(self, p, q):
        """Product of two basis paths: a basis path or None (zero)."""
        if p.target != q.source:
            return None
        if not p.arrows:
            return q
        if not q.arrows:
            return p
        arrows = p.arrows + q.arrows
        if arrows not in self._basis_arrows:
            return None
        return Path(p.source, q.target, arrows)

    def mul3(self, a, p, b):
        x = self.mul(a, p)
        if x is None:
            return None
        return self.mul(x, b)

    def multiply(self, x, y):
        """Product of two algebra elements."""
        F = self.field
        out = {}
        for p, c in x.items():
            for q, d in y.items():
                r = self.mul(p, q)
                if r is not None:
                    out[r] = out.get(r, 0) + c * d
        return self.clean(out)

    def sandwich(self, a, x, b):
        """``a * x * b`` for basis paths ``a``, ``b`` and an element ``x``."""
        out = {}
        for p, c in x.items():
            r = self.mul3(a, p, b)
            if r is not None:
                out[r] = out.get(r, 0) + c
        return self.clean(out)

    def clean(self, x):
        F = self.field
        out = {}
        for p, c in x.items():
            c = F.reduce(c)
            if not F.is_zero(c):
                out[p] = c
        return out

    def element(self, p, c=1):
        return {p: self.field(c)}

    def one(self):
        return {self.vertex(x): self.field(1) for x in self.quiver.vertices}

    def add(self, x, y, scale=1):
        out = dict(x)
        for p, c in y.items():
            out[p] = out.get(p, 0) + scale * c
        return self.clean(out)

    def format_element(self, x):
        if not x:
            return "0"
        parts = []
        for p in sorted(x, key=sort_key):
            c = self.field.format(x[p])
            parts.append(f"{c}*{self.label(p)}" if c != "1" else self.label(p))
        return " + ".join(parts)


def build_algebra(quiver, relations, field=RATIONALS, cap=DEFAULT_CAP):
    """Validate ``relations`` and enumerate the monomial basis.

    Raises :class:`AlgebraError` if a relation is too short, the set is
    not minimal, or a relation-free path longer than ``cap`` exists.
    """
    relations = list(relations)
    for r in relations:
        if r.length < 2:
            raise AlgebraError(
                f"relation {quiver.label(r)!r} has length {r.length} < 2")
    for i, r in enumerate(relations):
        for j, s in enumerate(relations):
            if i == j:
                continue
            if r.arrows == s.arrows:
                if i < j:
                    raise AlgebraError(
                        f"non-minimal relation set: {quiver.label(r)!r} listed twice")
                continue
            if _divides(r.arrows, s.arrows):
                raise AlgebraError(
                    f"non-minimal relation set: {quiver.label(r)!r} divides {quiver.label(s)!r}")
    relations.sort(key=sort_key)

    relset = {r.arrows for r in relations}
    lengths = sorted({r.length for r in relations})

    def ends_with_relation(arrows):
        n = len(arrows)
        return any(n >= k and arrows[n - k:] in relset for k in lengths)

    basis = [Path(x, x, ()) for x in quiver.vertices]
    level = [Path(quiver.source[a], quiver.target[a], (a,)) for a in range(len(quiver.arrows))]
    length = 1
    while level:
        if length > cap:
            w = min(level, key=sort_key)
            raise AlgebraError(
                f"basis not finite within cap {cap}: relation-free path "
                f"{quiver.label(w)!r} of length {w.length}")
        basis.extend(level)
        nxt = []
        for p in level:
            for a in quiver.out_arrows[p.target]:
                arrows = p.arrows + (a,)
                if not ends_with_relation(arrows):
                    nxt.append(Path(p.source, quiver.target[a], arrows))
        level = nxt
        length += 1
    basis.sort(key=sort_key)
    return MonomialAlgebra(quiver, relations, field, basis)


def _divides(small, big):
    k = len(small)
    return any(big[i:i + k] == small for i in range(len(big) - k + 1))


def compose_all(paths):
    """Concatenate a non-empty sequence of composable paths (no reduction)."""
    out = paths[0]
    for p in paths[1:]:
        out = compose(out, p)
        if out is None:
            raise ValueError("paths do not compose")
    return out
