"""Quivers, paths and the line-oriented quiver file format.

Positions along a path of length ``l`` index its ``l + 1`` vertices
``0..l``.  Everything downstream compares positions as integers along a
fixed ambient path, because on quivers with oriented cycles a bare
subpath does not say *where* it sits.
"""

import re
from dataclasses import dataclass
from typing import NamedTuple


class InputError(ValueError):
    """Malformed quiver input.  ``line`` is 1-based, or None."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Path(NamedTuple):
    """A path: endpoints plus the arrow ids in order.

    A trivial path ``e_x`` has ``source == target == x`` and no arrows.
    """

    source: int
    target: int
    arrows: tuple

    @property
    def length(self):
        return len(self.arrows)

    def is_trivial(self):
        return not self.arrows


def sort_key(p):
    """Global path order: length, then arrow ids, then base vertex."""
    return (len(p.arrows), p.arrows, p.source)


@dataclass(frozen=True)
class Occurrence:
    """``factor`` sitting inside ``host`` starting at arrow index ``offset``."""

    host: Path
    factor: Path
    offset: int

    @property
    def end(self):
        return self.offset + self.factor.length


class Quiver:
    """A finite quiver with dense 0-based vertex and arrow ids.

    ``arrows`` is a list of ``(source, target, label)``; the arrow id is
    the list index.  Vertices are shown to users 1-based.
    """

    def __init__(self, num_vertices, arrows):
        self.num_vertices = num_vertices
        self.arrows = [tuple(a) for a in arrows]
        self.source = [a[0] for a in self.arrows]
        self.target = [a[1] for a in self.arrows]
        self.labels = [a[2] for a in self.arrows]
        self.label_index = {}
        for i, (s, t, label) in enumerate(self.arrows):
            if not (0 <= s < num_vertices and 0 <= t < num_vertices):
                raise InputError(f"arrow {label!r} has an endpoint outside 1..{num_vertices}")
            if not label:
                raise InputError("empty arrow label")
            if label in self.label_index:
                raise InputError(f"duplicate arrow label {label!r}")
            self.label_index[label] = i
        self.out_arrows = [[] for _ in range(num_vertices)]
        for i, s in enumerate(self.source):
            self.out_arrows[s].append(i)

    @property
    def vertices(self):
        return list(range(self.num_vertices))

    def __repr__(self):
        return f"Quiver({self.num_vertices}, {self.arrows!r})"

    def __eq__(self, other):
        return (isinstance(other, Quiver) and other.num_vertices == self.num_vertices
                and other.arrows == self.arrows)

    def __hash__(self):
        return hash((self.num_vertices, tuple(self.arrows)))

    # paths

    def vertex(self, x):
        return Path(x, x, ())

    def arrow(self, i):
        return Path(self.source[i], self.target[i], (i,))

    def path(self, arrows, base=None):
        """Build a path from arrow ids, checking composability."""
        arrows = tuple(arrows)
        if not arrows:
            if base is None:
                raise ValueError("a trivial path needs a base vertex")
            return Path(base, base, ())
        for a, b in zip(arrows, arrows[1:]):
            if self.target[a] != self.source[b]:
                raise ValueError(
                    f"arrows {self.labels[a]!r} and {self.labels[b]!r} do not compose")
        return Path(self.source[arrows[0]], self.target[arrows[-1]], arrows)

    def path_from_labels(self, labels):
        return self.path([self.label_index[x] for x in labels])

    def vertex_at(self, p, i):
        """The vertex at position ``i`` (0..length) along ``p``."""
        if i == 0:
            return p.source
        return self.target[p.arrows[i - 1]]

    def subpath(self, p, i, j):
        """The piece of ``p`` between positions ``i <= j``."""
        if i == j:
            x = self.vertex_at(p, i)
            return Path(x, x, ())
        arrows = p.arrows[i:j]
        return Path(self.source[arrows[0]], self.target[arrows[-1]], arrows)

    def label(self, p):
        """User-facing label: ``e<k>`` for trivial paths, else arrow labels."""
        if not p.arrows:
            return f"e{p.source + 1}"
        return " ".join(self.labels[a] for a in p.arrows)

    def parse_path(self, text):
        """Inverse of :meth:`label`."""
        words = text.split()
        if len(words) == 1 and _VERTEX_LABEL.fullmatch(words[0]):
            x = int(words[0][1:]) - 1
            if not 0 <= x < self.num_vertices:
                raise ValueError(f"no vertex {words[0]!r}")
            return self.vertex(x)
        if not words:
            raise ValueError("empty path")
        for w in words:
            if w not in self.label_index:
                raise ValueError(f"unknown arrow label {w!r}")
        return self.path_from_labels(words)


def compose(p, q):
    """Concatenate ``p`` then ``q``; None when ``t(p) != s(q)``."""
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


def find_occurrences(factor, host):
    """Every offset where ``factor``'s arrows appear consecutively in ``host``."""
    if not factor.arrows:
        raise ValueError("factor must have length >= 1")
    k = len(factor.arrows)
    h = host.arrows
    return [Occurrence(host, factor, i) for i in range(len(h) - k + 1)
            if h[i:i + k] == factor.arrows]


# file format

_VERTEX_LABEL = re.compile(r"e\d+")
_LABEL = re.compile(r"[^\s:#@*]+")
_ARROW_LINE = re.compile(r"(\S+)\s*:\s*(\S+)\s*->\s*(\S+)")


def parse_input(text):
    """Parse a quiver file.  Returns ``(quiver, relations)``.

    Relations are returned as paths; they are *not* checked for
    minimality here (see :func:`hochcomp.algebra.build_algebra`).
    """
    num_vertices = None
    arrows = []
    relation_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise InputError(f"expected '<keyword>: ...', got {raw.strip()!r}", lineno)
        key = key.strip()
        rest = rest.strip()
        if key == "vertices":
            if num_vertices is not None:
                raise InputError("vertices declared twice", lineno)
            try:
                num_vertices = int(rest)
            except ValueError:
                raise InputError(f"bad vertex count {rest!r}", lineno) from None
            if num_vertices < 1:
                raise InputError("vertex count must be positive", lineno)
        elif key == "arrow":
            if num_vertices is None:
                raise InputError("arrow before 'vertices:' declaration", lineno)
            m = _ARROW_LINE.fullmatch(rest)
            if not m:
                raise InputError(f"bad arrow syntax {rest!r} (expected 'label : src -> tgt')", lineno)
            label, src, tgt = m.groups()
            if not _LABEL.fullmatch(label) or _VERTEX_LABEL.fullmatch(label):
                raise InputError(f"invalid or reserved arrow label {label!r}", lineno)
            try:
                s, t = int(src), int(tgt)
            except ValueError:
                raise InputError(f"bad arrow endpoints {src!r} -> {tgt!r}", lineno) from None
            if not (1 <= s <= num_vertices and 1 <= t <= num_vertices):
                raise InputError(f"arrow {label!r} endpoint outside 1..{num_vertices}", lineno)
            if any(a[2] == label for a in arrows):
                raise InputError(f"duplicate arrow label {label!r}", lineno)
            arrows.append((s - 1, t - 1, label))
        elif key == "relation":
            words = rest.split()
            if not words:
                raise InputError("empty relation", lineno)
            relation_lines.append((lineno, words))
        else:
            raise InputError(f"unknown keyword {key!r}", lineno)
    if num_vertices is None:
        raise InputError("missing 'vertices:' declaration")
    quiver = Quiver(num_vertices, arrows)
    relations = []
    for lineno, words in relation_lines:
        ids = []
        for w in words:
            if w not in quiver.label_index:
                raise InputError(f"unknown arrow label {w!r}", lineno)
            ids.append(quiver.label_index[w])
        for a, b in zip(ids, ids[1:]):
            if quiver.target[a] != quiver.source[b]:
                raise InputError(
                    f"non-composable relation: {quiver.labels[a]!r} ends at "
                    f"{quiver.target[a] + 1} but {quiver.labels[b]!r} starts at "
                    f"{quiver.source[b] + 1}", lineno)
        relations.append(quiver.path(ids))
    return quiver, relations


def format_input(quiver, relations):
    """Canonical text form; ``parse_input`` of it gives back the same data."""
    lines = [f"vertices: {quiver.num_vertices}"]
    for s, t, label in quiver.arrows:
        lines.append(f"arrow: {label} : {s + 1} -> {t + 1}")
    for r in relations:
        lines.append("relation: " + quiver.label(r))
    return "\n".join(lines) + "\n"
