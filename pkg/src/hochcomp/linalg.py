"""Sparse exact linear algebra over a :class:`~hochcomp.fields.Field`.

Vectors are dicts ``{index: value}`` without zeros.  Matrices are kept
as rows; pivots are chosen by smallest column index, so every echelon
form below is canonical for a fixed column order.
"""

import heapq


class ExactMatrix:
    """A labelled sparse matrix.  ``rows[i]`` is ``{j: value}``."""

    def __init__(self, row_labels, col_labels, rows, field):
        self.row_labels = list(row_labels)
        self.col_labels = list(col_labels)
        self.rows = rows
        self.field = field

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    def is_zero(self):
        return not any(self.rows.values())

    def entry(self, i, j):
        return self.rows.get(i, {}).get(j, 0)

    def rank(self):
        return rank(self.rows.values(), self.field)

    def kernel(self):
        return kernel(self.rows.values(), len(self.col_labels), self.field)

    def apply(self, vec):
        """Image of a column-space vector."""
        F = self.field
        out = {}
        for i, row in self.rows.items():
            s = 0
            for j, v in row.items():
                x = vec.get(j)
                if x is not None:
                    s += v * x
            s = F.reduce(s)
            if not F.is_zero(s):
                out[i] = s
        return out

    def columns(self):
        cols = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                cols.setdefault(j, {})[i] = v
        return [cols.get(j, {}) for j in range(len(self.col_labels))]

    def to_dense(self):
        m, n = self.shape
        return [[self.entry(i, j) for j in range(n)] for i in range(m)]


def _normalize(vec, field):
    out = {}
    for k, v in vec.items():
        v = field(v)
        if not field.is_zero(v):
            out[k] = v
    return out


def _axpy(y, a, x, field):
    """``y += a * x`` in place, dropping zeros."""
    for k, v in x.items():
        s = field.reduce(y.get(k, 0) + a * v)
        if field.is_zero(s):
            y.pop(k, None)
        else:
            y[k] = s


class Echelon:
    """Incremental reduced row echelon form.

    ``pivots`` maps pivot column to its row, which has a 1 there and
    zeros in every other pivot column.
    """

    def __init__(self, field):
        self.field = field
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Remainder of ``vec`` modulo the span (a new dict)."""
        out = _normalize(vec, self.field)
        for c in [c for c in out if c in self.pivots]:
            a = out.get(c)
            if a is not None:
                _axpy(out, -a, self.pivots[c], self.field)
        return out

    def add(self, vec):
        """Insert ``vec``; returns its pivot column or None if dependent."""
        F = self.field
        r = self.reduce(vec)
        if not r:
            return None
        c = min(r)
        inv = F.inv(r[c])
        r = {k: F.reduce(v * inv) for k, v in r.items()}
        for row in self.pivots.values():
            a = row.get(c)
            if a is not None:
                _axpy(row, -a, r, F)
        self.pivots[c] = r
        return c

    def rows(self):
        return [self.pivots[c] for c in sorted(self.pivots)]


def rank(rows, field):
    """Rank by semi-echelon elimination (no back substitution)."""
    pivots = {}
    r = 0
    for row in rows:
        vec = _normalize(row, field)
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = vec.get(c)
            if a is None:
                continue
            p = pivots.get(c)
            if p is None:
                inv = field.inv(a)
                pivots[c] = {k: field.reduce(v * inv) for k, v in vec.items()}
                r += 1
                break
            for k, v in p.items():
                if k == c:
                    continue
                s = field.reduce(vec.get(k, 0) - a * v)
                if field.is_zero(s):
                    vec.pop(k, None)
                else:
                    if k not in vec:
                        heapq.heappush(heap, k)
                    vec[k] = s
            del vec[c]
    return r


def kernel(rows, ncols, field):
    """Basis of ``{x : M x = 0}`` read off the reduced echelon form.

    One vector per free column ``f``, with ``x_f = 1``; the list is
    ordered by ``f``.
    """
    ech = Echelon(field)
    for row in rows:
        ech.add(row)
    out = []
    for f in range(ncols):
        if f in ech.pivots:
            continue
        vec = {f: field(1)}
        for c, row in ech.pivots.items():
            a = row.get(f)
            if a is not None:
                vec[c] = field.reduce(-a)
        out.append(vec)
    return out


def solve(vectors, target, field):
    """Coefficients ``x`` with ``sum x_i vectors[i] == target``, or None.

    Free coefficients are set to zero.
    """
    # echelonise with a tag coordinate per input vector to track combinations
    n = len(vectors)
    tagged = Echelon(field)
    big = 1 + max([max(v) for v in vectors if v] + [max(target) if target else 0, 0])
    for i, v in enumerate(vectors):
        row = dict(v)
        row[big + i] = field(1)
        tagged.add(row)
    rem = tagged.reduce(target)
    if any(k < big for k in rem):
        return None
    # target - sum(...) reduces to rem; the tag part encodes -combination
    x = [0] * n
    for k, v in rem.items():
        x[k - big] = field.reduce(-v)
    return x
