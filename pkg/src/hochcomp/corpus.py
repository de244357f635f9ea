"""Bundled test algebras and input loading."""

from importlib import resources
from pathlib import Path as FsPath

from .algebra import DEFAULT_CAP, build_algebra
from .fields import RATIONALS
from .quiver import parse_input


def corpus_names():
    files = resources.files("hochcomp") / "data"
    return sorted(p.name[:-len(".quiver")] for p in files.iterdir()
                  if p.name.endswith(".quiver"))


def corpus_text(name):
    if name.endswith(".quiver"):
        name = name[:-len(".quiver")]
    path = resources.files("hochcomp") / "data" / f"{name}.quiver"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled algebra named {name!r}")
    return path.read_text()


def read_input(path):
    """Text of a quiver file; a missing path falls back to the bundled
    corpus, so ``cyclic3.quiver`` works from any directory."""
    p = FsPath(path)
    if p.is_file():
        return p.read_text()
    try:
        return corpus_text(p.name)
    except FileNotFoundError:
        raise FileNotFoundError(f"{path}: no such file") from None


def load(name_or_path, field=RATIONALS, cap=DEFAULT_CAP):
    quiver, relations = parse_input(read_input(name_or_path))
    return build_algebra(quiver, relations, field, cap)


def load_corpus(field=RATIONALS, max_dim=None):
    out = {}
    for name in corpus_names():
        A = build_algebra(*parse_input(corpus_text(name)), field)
        if max_dim is None or A.dim <= max_dim:
            out[name] = A
    return out
