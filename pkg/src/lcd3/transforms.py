"""The code calculus: puncturing, shortening, juxtaposition, column scaling.

Coordinates are 1-based everywhere on the public surface, written as strictly
increasing sequences (the conventional coordinate-set notation).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import TransformError
from .gf3 import GF3Matrix, _nullspace_array, _rank_array
from .code import LinearCode


def check_coords(coords: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a 1-based, strictly increasing, in-range coordinate set."""
    cs = tuple(int(c) for c in coords)
    if not cs:
        raise TransformError("coordinate set must be nonempty")
    if any(c < 1 or c > n for c in cs):
        raise TransformError(f"coordinates must lie in 1..{n}: {cs}")
    if any(a >= b for a, b in zip(cs, cs[1:])):
        raise TransformError(f"coordinates must be strictly increasing: {cs}")
    return cs


def puncture(c: LinearCode, coords: Sequence[int]) -> LinearCode:
    """Delete the given coordinates from every codeword.

    The dimension must survive: a rank drop is reported as an error rather
    than silently re-dimensioning, since every recipe here preserves k.
    """
    cs = check_coords(coords, c.n)
    if len(cs) >= c.n:
        raise TransformError("cannot puncture away every coordinate")
    keep = [j for j in range(c.n) if (j + 1) not in cs]
    g = c.generator.array[:, keep]
    if _rank_array(g) != c.k:
        raise TransformError(
            f"puncture on {cs} collapses dimension below {c.k}")
    return LinearCode(GF3Matrix._wrap(g.copy()))


def shorten(c: LinearCode, coords: Sequence[int]) -> LinearCode:
    """Restrict to codewords vanishing on the coordinates, then delete them.

    Computed on the message side: the subcode is the nullspace of the
    selected generator columns acting on messages.  The subcode must have
    dimension exactly k - |coords|.
    """
    cs = check_coords(coords, c.n)
    if len(cs) >= c.k:
        raise TransformError(
            f"shortening by {len(cs)} coordinates leaves no dimension (k={c.k})")
    g = c.generator.array
    sel = g[:, [p - 1 for p in cs]]
    # messages m with m @ sel == 0
    u = _nullspace_array(sel.T)
    expect = c.k - len(cs)
    if u.shape[0] != expect:
        raise TransformError(
            f"shortening on {cs} gives a subcode of dimension {u.shape[0]}, "
            f"expected {expect}")
    sub = (u.astype(np.int16) @ g.astype(np.int16)) % 3
    keep = [j for j in range(c.n) if (j + 1) not in cs]
    return LinearCode(GF3Matrix._wrap(sub[:, keep].astype(np.int8)))


def juxtapose(c: LinearCode, block: GF3Matrix, copies: int) -> LinearCode:
    """Append ``copies`` copies of ``block`` to the right of the generator."""
    if copies < 0:
        raise TransformError("copies must be >= 0")
    if block.rows != c.k:
        raise TransformError(
            f"block has {block.rows} rows, code has dimension {c.k}")
    if copies == 0:
        return c
    parts = [c.generator.array] + [block.array] * copies
    return LinearCode(GF3Matrix._wrap(np.hstack(parts)))


def scale_columns(c: LinearCode, coords: Sequence[int], factor: int) -> LinearCode:
    """Multiply the listed columns by a nonzero scalar.

    Over GF(3) the only scalars are 1 and 2, and 2^2 = 1, so the Gram matrix
    and the weight enumerator are unchanged.
    """
    if factor not in (1, 2):
        raise TransformError("scale factor must be 1 or 2")
    cs = check_coords(coords, c.n)
    g = c.generator.array.astype(np.int16).copy()
    idx = [p - 1 for p in cs]
    g[:, idx] = (g[:, idx] * factor) % 3
    return LinearCode(GF3Matrix._wrap(g.astype(np.int8)))
