"""Hochschild cohomology from Bardzell's resolution, plus small oracles.

``Hom_{A^e}(A (x) kAP_n (x) A, A)`` has basis the pairs ``(w, gamma)``
with ``w`` in ``AP_n`` and ``gamma`` a basis path parallel to ``w``.
A cochain stores its values on the generators ``1 (x) w (x) 1``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import bar
from .linalg import Echelon, ExactMatrix, rank, solve
from .quiver import InputError, sort_key
from .resolution import Report, ap_sort_key, resolution


@dataclass(frozen=True)
class HomBasisElement:
    source: object  # APElement
    target: object  # Path parallel to source.support


@dataclass
class Cochain:
    """``values[w]`` is an algebra element in ``e_{s(w)} A e_{t(w)}``."""

    degree: int
    values: dict = field(default_factory=dict)

    def __call__(self, w):
        return self.values.get(w, {})

    def is_zero(self):
        return not any(self.values.values())

    def scaled(self, c, A):
        return Cochain(self.degree, {w: A.clean({p: c * v for p, v in x.items()})
                                     for w, x in self.values.items()}).pruned()

    def plus(self, other, A, scale=1):
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        vals = dict(self.values)
        for w, x in other.values.items():
            vals[w] = A.add(vals.get(w, {}), x, scale)
        return Cochain(self.degree, vals).pruned()

    def pruned(self):
        return Cochain(self.degree, {w: x for w, x in self.values.items() if x})

    def equals(self, other):
        return self.degree == other.degree and self.pruned().values == other.pruned().values


class HochschildComplex:
    """Cochain complex ``Hom_{A^e}(Ap A, A)`` with cached matrices."""

    def __init__(self, A):
        self.A = A
        self.res = resolution(A)
        self._basis = {}
        self._index = {}
        self._matrix = {}
        self._rank = {}
        self._hh = {}
        self._image = {}

    # bases and coordinates

    def hom_basis(self, n):
        try:
            return self._basis[n]
        except KeyError:
            pass
        A = self.A
        out = [HomBasisElement(w, g) for w in self.res.ap(n)
               for g in A.paths_between(w.source, w.target)]
        self._basis[n] = out
        self._index[n] = {(b.source, b.target): i for i, b in enumerate(out)}
        return out

    def index(self, n):
        self.hom_basis(n)
        return self._index[n]

    def to_vector(self, f):
        idx = self.index(f.degree)
        F = self.A.field
        vec = {}
        for w, x in f.values.items():
            for p, c in x.items():
                if (w, p) not in idx:
                    raise ValueError(
                        f"value {self.A.label(p)} at {self.res.label(w)} is not parallel")
                c = F(c)
                if not F.is_zero(c):
                    vec[idx[w, p]] = c
        return vec

    def from_vector(self, n, vec):
        basis = self.hom_basis(n)
        vals = {}
        for i, c in vec.items():
            b = basis[i]
            vals.setdefault(b.source, {})[b.target] = c
        return Cochain(n, vals)

    # coboundaries

    def coboundary_matrix(self, n):
        """Matrix of ``d^n = Hom(d_n, A)``: degree ``n-1`` to degree ``n``."""
        try:
            return self._matrix[n]
        except KeyError:
            pass
        if n < 1:
            raise ValueError("d^n is defined for n >= 1")
        A, res = self.A, self.res
        rows_basis = self.hom_basis(n)
        cols_basis = self.hom_basis(n - 1)
        row_idx = self.index(n)
        col_idx = self.index(n - 1)
        rows = {}
        for w in res.ap(n):
            for (L, psi, R), c in res.d(w).items():
                for g in A.paths_between(psi.source, psi.target):
                    prod = A.mul3(L, g, R)
                    if prod is None:
                        continue
                    i = row_idx[w, prod]
                    j = col_idx[psi, g]
                    row = rows.setdefault(i, {})
                    v = A.field.reduce(row.get(j, 0) + c)
                    if A.field.is_zero(v):
                        row.pop(j, None)
                    else:
                        row[j] = A.field(v)
        rows = {i: r for i, r in rows.items() if r}
        m = ExactMatrix(rows_basis, cols_basis, rows, A.field)
        self._matrix[n] = m
        return m

    def rank_d(self, n):
        """``rank d^n`` with ``d^0 = 0``."""
        if n <= 0:
            return 0
        if n not in self._rank:
            self._rank[n] = self.coboundary_matrix(n).rank()
        return self._rank[n]

    def coboundary(self, f):
        """``d^{n+1} f = f o d_{n+1}`` as a cochain."""
        A, res = self.A, self.res
        n = f.degree
        vals = {}
        for w in res.ap(n + 1):
            acc = {}
            for (L, psi, R), c in res.d(w).items():
                for p, v in f(psi).items():
                    prod = A.mul3(L, p, R)
                    if prod is not None:
                        acc[prod] = acc.get(prod, 0) + c * v
            acc = A.clean(acc)
            if acc:
                vals[w] = acc
        return Cochain(n + 1, vals)

    def is_cocycle(self, f):
        return self.coboundary(f).is_zero()

    # cohomology

    def dim_hh(self, n):
        return len(self.hom_basis(n)) - self.rank_d(n + 1) - self.rank_d(n)

    def image_echelon(self, n):
        """Echelon basis of ``im d^n`` inside degree-``n`` coordinates."""
        try:
            return self._image[n]
        except KeyError:
            pass
        ech = Echelon(self.A.field)
        if n >= 1:
            for col in self.coboundary_matrix(n).columns():
                if col:
                    ech.add(col)
        self._image[n] = ech
        return ech

    def hh(self, n):
        """``(dim HH^n, representatives)``.

        Representatives come from the reduced kernel basis of
        ``d^{n+1}``, taken in order whenever independent modulo the
        image, then reduced to their normal form modulo ``im d^n`` and
        scaled to leading coefficient 1.
        """
        try:
            return self._hh[n]
        except KeyError:
            pass
        F = self.A.field
        kern = self.coboundary_matrix(n + 1).kernel()
        image = self.image_echelon(n)
        span = Echelon(F)
        for r in image.rows():
            span.add(r)
        reps = []
        for v in kern:
            if span.add(v) is None:
                continue
            r = image.reduce(v)
            lead = r[min(r)]
            inv = F.inv(lead)
            r = {k: F.reduce(x * inv) for k, x in r.items()}
            reps.append(self.from_vector(n, r))
        dim = len(reps)
        if dim != self.dim_hh(n):
            raise AssertionError(f"HH^{n}: {dim} representatives but dimension {self.dim_hh(n)}")
        self._hh[n] = (dim, reps)
        return self._hh[n]

    def class_coordinates(self, f):
        """Coordinates of the class of the cocycle ``f`` in terms of
        ``hh(n)`` representatives."""
        n = f.degree
        if not self.is_cocycle(f):
            raise ValueError(f"not a cocycle (degree {n})")
        _, reps = self.hh(n)
        vec = self.to_vector(f)
        image = self.image_echelon(n)
        vectors = [self.to_vector(r) for r in reps] + image.rows()
        x = solve(vectors, vec, self.A.field)
        if x is None:
            raise AssertionError("cocycle not in span of representatives and coboundaries")
        return x[:len(reps)]

    def is_coboundary(self, f):
        vec = self.to_vector(f)
        if not vec:
            return True
        return not self.image_echelon(f.degree).reduce(vec)


def complex_of(A):
    c = A._cache.get("hochschild")
    if c is None:
        c = A._cache["hochschild"] = HochschildComplex(A)
    return c


def hom_basis(A, n):
    return complex_of(A).hom_basis(n)


def coboundary_matrix(A, n):
    return complex_of(A).coboundary_matrix(n)


def hh(A, n):
    return complex_of(A).hh(n)


def hh_center_oracle(A):
    """``dim Z(A)`` from the linear system ``z x = x z`` for generators ``x``."""
    basis = A.basis
    gens = [A.vertex(x) for x in A.quiver.vertices] + \
           [A.quiver.arrow(a) for a in range(len(A.quiver.arrows))]
    index = {p: i for i, p in enumerate(basis)}
    # one equation per (generator, output basis path): coefficient of each unknown
    eqs = {}
    for gi, x in enumerate(gens):
        for j, p in enumerate(basis):
            left = A.mul(p, x)
            if left is not None:
                eq = eqs.setdefault((gi, index[left]), {})
                eq[j] = eq.get(j, 0) + 1
            right = A.mul(x, p)
            if right is not None:
                eq = eqs.setdefault((gi, index[right]), {})
                eq[j] = eq.get(j, 0) - 1
    return len(basis) - rank(eqs.values(), A.field)


# brute-force oracle on the bar complex


def bar_hh_dims(A, max_degree):
    """``dim HH^n`` for ``n <= max_degree`` from ``Hom_{E^e}(A^{(x)n}, A)``.

    Exponential in ``max_degree``; meant for algebras of dimension < 10.
    """
    cochains = {}
    for n in range(max_degree + 2):
        if n == 0:
            seqs = [((), x) for x in A.quiver.vertices]
        else:
            seqs = [(s, None) for s in bar.sequences(A, n)]
        basis = []
        for s, x in seqs:
            src = s[0].source if s else x
            tgt = s[-1].target if s else x
            basis.extend((s, x, g) for g in A.paths_between(src, tgt))
        cochains[n] = basis

    def delta_rank(n):
        """rank of ``delta: C^n -> C^{n+1}``."""
        col = {(s, x, g): j for j, (s, x, g) in enumerate(cochains[n])}
        row_idx = {(s, g): i for i, (s, _, g) in enumerate(cochains[n + 1])}
        rows = {}

        def put(seq, out_path, s, x, g, c):
            i = row_idx[seq, out_path]
            row = rows.setdefault(i, {})
            j = col[s, x, g]
            row[j] = row.get(j, 0) + c

        for seq in bar.sequences(A, n + 1):
            k = len(seq)
            # v_1 * phi(v_2..v_k)
            rest = seq[1:]
            x0 = seq[0].target
            for g in A.paths_between(rest[0].source if rest else x0, rest[-1].target if rest else x0):
                prod = A.mul(seq[0], g)
                if prod is not None:
                    put(seq, prod, rest, None if rest else x0, g, 1)
            # inner products
            for i in range(k - 1):
                p = A.mul(seq[i], seq[i + 1])
                if p is None:
                    continue
                inner = seq[:i] + (p,) + seq[i + 2:]
                for g in A.paths_between(inner[0].source, inner[-1].target):
                    put(seq, g, inner, None, g, (-1) ** (i + 1))
            # (-1)^k phi(v_1..v_{k-1}) * v_k
            head = seq[:-1]
            xk = seq[-1].source
            for g in A.paths_between(head[0].source if head else xk, head[-1].target if head else xk):
                prod = A.mul(g, seq[-1])
                if prod is not None:
                    put(seq, prod, head, None if head else xk, g, (-1) ** k)
        return rank(rows.values(), A.field)

    ranks = {n: delta_rank(n) for n in range(max_degree + 1)}
    return {n: len(cochains[n]) - ranks[n] - (ranks[n - 1] if n else 0)
            for n in range(max_degree + 1)}


# cochain files
#
#   AP:a1 a2 a3 a1@0:4 -> 1 * a1
#   ---
#   AP:a1@ -> 2 * a1
#
# one value term per line; "@" is followed by the left-chain offsets
# "start:end" of the generator (empty in degrees 0 and 1); "---"
# separates cochains; "#" starts a comment.


def format_offsets(w):
    return ",".join(f"{s}:{e}" for s, e in w.chain)


def format_cochain(f, A):
    res = resolution(A)
    lines = []
    for w in sorted(f.values, key=ap_sort_key):
        for p in sorted(f.values[w], key=sort_key):
            c = A.field.format(f.values[w][p])
            lines.append(f"AP:{res.label(w)}@{format_offsets(w)} -> {c} * {A.label(p)}")
    return "\n".join(lines)


def _parse_term(line, A, lineno):
    res = resolution(A)
    Q = A.quiver
    try:
        head, value = line.split("->", 1)
        head = head.strip()
        if not head.startswith("AP:") or "@" not in head:
            raise ValueError("expected 'AP:<support>@<offsets>'")
        support_text, offsets_text = head[3:].split("@", 1)
        support = Q.parse_path(support_text)
        offsets = tuple(tuple(int(x) for x in part.split(":"))
                        for part in offsets_text.split(",") if part.strip())
        if any(len(o) != 2 for o in offsets):
            raise ValueError(f"bad offsets {offsets_text!r}")
        degree = 0 if support.length == 0 else len(offsets) + 1
        w = res.element(support, degree)
        if w is None or w.chain != offsets:
            raise ValueError(f"{support_text.strip()!r} with offsets {offsets_text!r} "
                             "is not an AP generator")
        coeff_text, _, path_text = value.partition("*")
        if not path_text.strip():
            raise ValueError("expected '<coeff> * <path>'")
        coeff = A.field(Fraction(coeff_text.strip()))
        p = A.quiver.parse_path(path_text)
        if not A.is_basis(p):
            raise ValueError(f"{path_text.strip()!r} is zero in the algebra")
        if (p.source, p.target) != (w.source, w.target):
            raise ValueError(f"{path_text.strip()!r} is not parallel to {support_text.strip()!r}")
    except ValueError as exc:
        raise InputError(str(exc), lineno) from None
    return w, p, coeff


def parse_cochains(text, A):
    """All cochains in a cochain file, in order."""
    blocks = [[]]
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "---":
            blocks.append([])
            continue
        blocks[-1].append(_parse_term(line, A, lineno))
    out = []
    for terms in blocks:
        if not terms:
            continue
        degrees = {w.degree for w, _, _ in terms}
        if len(degrees) != 1:
            raise InputError(f"cochain mixes degrees {sorted(degrees)}")
        values = {}
        for w, p, c in terms:
            x = values.setdefault(w, {})
            x[p] = A.field.reduce(x.get(p, 0) + c)
        out.append(Cochain(degrees.pop(), {w: A.clean(x) for w, x in values.items()}).pruned())
    return out


# verification suites


def verify_center(A):
    """``dim HH^0`` equals the dimension of the center."""
    rep = Report("center_oracle")
    rep.checked = 1
    got, want = complex_of(A).dim_hh(0), hh_center_oracle(A)
    rep.details = {"hh0": got, "center": want}
    if got != want:
        rep.fail(f"dim HH^0 = {got} but dim Z(A) = {want}")
    return rep


def verify_bar_oracle(A, max_degree=3):
    """Dimensions agree with brute force on the bar complex."""
    rep = Report("bar_oracle")
    want = bar_hh_dims(A, max_degree)
    C = complex_of(A)
    for n in range(max_degree + 1):
        rep.checked += 1
        if C.dim_hh(n) != want[n]:
            rep.fail(f"dim HH^{n}: {C.dim_hh(n)} from Bardzell, {want[n]} from bar")
            break
    rep.details = {"dims": [want[n] for n in range(max_degree + 1)]}
    return rep


def verify_representatives(A, max_degree):
    """Representatives are cocycles, independent modulo coboundaries."""
    rep = Report("representatives")
    C = complex_of(A)
    for n in range(max_degree + 1):
        dim, reps = C.hh(n)
        for k, f in enumerate(reps):
            rep.checked += 1
            if not C.is_cocycle(f):
                rep.fail(f"HH^{n} representative {k + 1} is not a cocycle")
                return rep
            coords = C.class_coordinates(f)
            if coords != [1 if j == k else 0 for j in range(dim)]:
                rep.fail(f"HH^{n} representative {k + 1} has coordinates {coords}")
                return rep
    return rep


def verify_cochain_complex(A, max_degree):
    """``d^{n+1} d^n = 0`` as matrices, and ranks fit inside each ``Hom_n``."""
    rep = Report("cochain_complex")
    C = complex_of(A)
    for n in range(1, max_degree + 1):
        rep.checked += 1
        first, second = C.coboundary_matrix(n), C.coboundary_matrix(n + 1)
        for col in first.columns():
            if second.apply(col):
                rep.fail(f"d^{n + 1} d^{n} != 0")
                return rep
    for n in range(max_degree + 1):
        rep.checked += 1
        if C.dim_hh(n) < 0:
            rep.fail(f"rank d^{n} + rank d^{n + 1} exceeds dim Hom_{n}")
            return rep
    return rep
