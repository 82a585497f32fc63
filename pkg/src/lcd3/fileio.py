"""Canonical on-disk format for a single code (text, bit-exact).

    ternary-code v1
    n=<n> k=<k>
    <k lines of n digits from {0,1,2}>

The format is canonical: writing a code and reading it back yields the exact
generator, so files can be hashed.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FileFormatError
from .gf3 import GF3Matrix
from .code import LinearCode, make_code

MAGIC = "ternary-code v1"


def format_code(code: LinearCode) -> str:
    lines = [MAGIC, f"n={code.n} k={code.k}"]
    lines += ["".join(str(int(x)) for x in row) for row in code.generator.array]
    return "\n".join(lines) + "\n"


def write_code_file(path: str | Path, code: LinearCode) -> None:
    Path(path).write_text(format_code(code), encoding="ascii")


def parse_code(text: str) -> LinearCode:
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise FileFormatError(f"expected header {MAGIC!r}", line=1)
    if len(lines) < 2:
        raise FileFormatError("missing dimension line", line=2)
    fields = lines[1].split()
    try:
        props = dict(f.split("=", 1) for f in fields)
        n = int(props["n"])
        k = int(props["k"])
    except (ValueError, KeyError):
        raise FileFormatError(f"expected 'n=<n> k=<k>', got {lines[1]!r}", line=2)
    if n < 1 or k < 1 or k > n:
        raise FileFormatError(f"invalid dimensions n={n} k={k}", line=2)
    rows = []
    for i in range(k):
        lineno = 3 + i
        if lineno - 1 >= len(lines):
            raise FileFormatError(f"expected {k} generator rows, found {i}", line=lineno)
        raw = lines[lineno - 1].strip()
        if len(raw) != n or any(ch not in "012" for ch in raw):
            raise FileFormatError(
                f"row must be {n} characters from {{0,1,2}}, got {raw!r}", line=lineno)
        rows.append([int(ch) for ch in raw])
    extra = [t for t in lines[2 + k:] if t.strip()]
    if extra:
        raise FileFormatError("trailing content after generator rows", line=3 + k)
    return make_code(GF3Matrix(rows))


def read_code_file(path: str | Path) -> LinearCode:
    return parse_code(Path(path).read_text(encoding="ascii"))
