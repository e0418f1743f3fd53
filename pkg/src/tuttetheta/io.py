"""Text formats: graph files, 0/1 matrix files, and JSON helpers.

Graph file::

    V 3
    E 0 1
    E 1 2
    M 0 1      # optional: marks an edge for subdivision

Matrix file: one row per line, each a string of ``0``/``1``.
``#`` starts a comment in both formats.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .codes import BinaryCode
from .errors import FormatError
from .graphs import Multigraph

__all__ = [
    "parse_graph",
    "read_graph",
    "format_graph",
    "write_graph",
    "parse_matrix",
    "read_matrix",
    "format_matrix",
    "read_code",
    "fixture_code",
    "dump_json",
    "load_json",
]


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_graph(text: str, path=None) -> tuple[Multigraph, list]:
    n = None
    edges: list = []
    marked: list = []
    for no, line in _lines(text):
        parts = line.split()
        tag = parts[0]
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise FormatError(f"expected integers in {line!r}", no, path) from None
        if tag == "V":
            if n is not None:
                raise FormatError("duplicate V line", no, path)
            if len(nums) != 1 or nums[0] < 0:
                raise FormatError("V needs one nonnegative vertex count", no, path)
            n = nums[0]
        elif tag in ("E", "M"):
            if n is None:
                raise FormatError(f"{tag} line before V line", no, path)
            if len(nums) != 2:
                raise FormatError(f"{tag} needs two vertex indices", no, path)
            u, v = nums
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"vertex index out of range 0..{n - 1}", no, path)
            (edges if tag == "E" else marked).append((u, v))
        else:
            raise FormatError(f"unknown line type {tag!r}", no, path)
    if n is None:
        raise FormatError("missing V line", None, path)
    g = Multigraph(n, tuple(edges))
    present = list(g.edges)
    for u, v in marked:
        e = (min(u, v), max(u, v))
        if e not in present:
            raise FormatError(f"marked edge {e} is not an edge of the graph", None, path)
        present.remove(e)
    return g, marked


def read_graph(path) -> tuple[Multigraph, list]:
    return parse_graph(Path(path).read_text(), str(path))


def format_graph(g: Multigraph, marked=()) -> str:
    lines = [f"V {g.n_vertices}"]
    lines += [f"E {u} {v}" for u, v in g.edges]
    lines += [f"M {u} {v}" for u, v in marked]
    return "\n".join(lines) + "\n"


def write_graph(path, g: Multigraph, marked=()):
    Path(path).write_text(format_graph(g, marked))


def parse_matrix(text: str, path=None) -> list[list[int]]:
    rows = []
    width = None
    for no, line in _lines(text):
        line = line.replace(" ", "")
        bad = set(line) - {"0", "1"}
        if bad:
            col = min(line.index(ch) for ch in bad) + 1
            raise FormatError(f"column {col}: only 0/1 allowed", no, path)
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise FormatError(f"row has {len(line)} entries, expected {width}", no, path)
        rows.append([int(ch) for ch in line])
    return rows


def read_matrix(path) -> list[list[int]]:
    return parse_matrix(Path(path).read_text(), str(path))


def format_matrix(rows) -> str:
    return "".join("".join(str(b) for b in row) + "\n" for row in rows)


def read_code(path) -> BinaryCode:
    rows = read_matrix(path)
    if not rows:
        raise FormatError("empty matrix file; give at least one (possibly zero) row", None, str(path))
    return BinaryCode.from_matrix(rows)


def fixture_code(name: str) -> BinaryCode:
    """Bundled generator matrices: ``"e8"`` or ``"d16plus"``."""
    text = resources.files("tuttetheta").joinpath(f"data/{name}.gen").read_text()
    return BinaryCode.from_matrix(parse_matrix(text, name))


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg} (column {exc.colno})", exc.lineno, str(path)) from None
