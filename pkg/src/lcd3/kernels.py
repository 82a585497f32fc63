"""Vectorized batch kernels over GF(3) used by the search engines.

Everything here operates on raw numpy arrays for speed; the public modules
wrap results back into GF3Matrix / LinearCode values.  All candidate codes
are systematic, [I_k | A], so the Gram matrix is I + A*A^T and (by the
Sylvester determinant identity) its nonsingularity can be tested on the
smaller of the two blocks A*A^T and A^T*A.
"""

from __future__ import annotations

import numpy as np

from .code import krawtchouk_table


def all_messages(k: int) -> np.ndarray:
    """All 3^k vectors, base-3 counter order, first coordinate most significant."""
    idx = np.arange(3 ** k, dtype=np.int64)
    powers = 3 ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers) % 3).astype(np.int8)

def messages_up_to_sign(k: int) -> np.ndarray:
    """One representative of each {m, -m} pair of nonzero messages."""
    m = all_messages(k)[1:]
    first_nz = (m != 0).argmax(axis=1)
    lead = m[np.arange(len(m)), first_nz]
    return np.ascontiguousarray(m[lead == 1])


def counter_block(start: int, stop: int, shape: tuple[int, int]) -> np.ndarray:
    """Candidate blocks A for counter indices [start, stop).

    Index digits are the row-major entries of A, first entry most
    significant, so counter order equals lexicographic order on entries.
    """
    k, m = shape
    e = k * m
    idx = np.arange(start, stop, dtype=np.int64)
    powers = 3 ** np.arange(e - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // powers) % 3
    return digits.astype(np.int8).reshape(-1, k, m)


def batch_nonsingular(M: np.ndarray) -> np.ndarray:
    """ok[c] = True iff M[c] is nonsingular over GF(3).  M: (C, s, s)."""
    M = M.astype(np.int16).copy() % 3
    C, s, _ = M.shape
    ok = np.ones(C, dtype=bool)
    idx = np.arange(C)
    for col in range(s):
        sub = M[:, col:, col] != 0
        ok &= sub.any(axis=1)
        pr = sub.argmax(axis=1) + col
        pivot_rows = M[idx, pr, :].copy()
        M[idx, pr, :] = M[:, col, :]
        M[:, col, :] = pivot_rows
        inv = M[:, col, col].copy()
        inv[inv == 0] = 1  # rows already marked singular; keep arithmetic sane
        M[:, col, :] = (M[:, col, :] * inv[:, None]) % 3
        if col + 1 < s:
            f = M[:, col + 1:, col]
            M[:, col + 1:, :] = (M[:, col + 1:, :] - f[:, :, None] * M[:, col, None, :]) % 3
    return ok


def batch_lcd(As: np.ndarray) -> np.ndarray:
    """LCD flags for systematic codes [I_k | A], batch over the first axis."""
    As = As.astype(np.int16)
    k, m = As.shape[1], As.shape[2]
    if k <= m:
        P = np.einsum("cij,ckj->cik", As, As) % 3
    else:
        P = np.einsum("cji,cjk->cik", As, As) % 3
    s = P.shape[1]
    return batch_nonsingular((P + np.eye(s, dtype=np.int16)) % 3)


class SystematicBatch:
    """Weight statistics for batches of [I_k | A] candidates at fixed (n, k).

    Enumerates the smaller of code and dual (3^min(k, n-k) codewords) and
    recovers the other side exactly through the MacWilliams transform.
    """

    def __init__(self, n: int, k: int, msg_block: int = 2048):
        self.n, self.k, self.m = n, k, n - k
        self.small_primal = k <= self.m
        self.s = min(k, self.m)
        self.msgs = messages_up_to_sign(self.s).astype(np.int16)
        self.msg_wt = np.count_nonzero(self.msgs, axis=1).astype(np.int16)
        self.K = krawtchouk_table(n)
        self.msg_block = msg_block

    def weights(self, As: np.ndarray) -> np.ndarray:
        """(C, M) codeword weights of the enumerated side, one row per candidate."""
        C = As.shape[0]
        out = np.empty((C, len(self.msgs)), dtype=np.int16)
        As16 = As.astype(np.int16)
        for lo in range(0, len(self.msgs), self.msg_block):
            mb = self.msgs[lo:lo + self.msg_block]
            if self.small_primal:
                prod = np.einsum("Ms,csm->cMm", mb, As16) % 3
            else:
                prod = np.einsum("Ms,cks->cMk", mb, As16) % 3
            out[:, lo:lo + len(mb)] = (self.msg_wt[lo:lo + len(mb)][None, :]
                                       + np.count_nonzero(prod, axis=2))
        return out

    def counts_from_weights(self, W: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(primal, dual) weight histograms (C, n+1) from enumerated weights."""
        n = self.n
        C = W.shape[0]
        flat = (np.arange(C)[:, None] * (n + 1) + W.astype(np.int64)).ravel()
        cnt = np.bincount(flat, minlength=C * (n + 1)).reshape(C, n + 1) * 2
        cnt[:, 0] += 1
        other = (cnt @ self.K.T) // 3 ** self.s
        if self.small_primal:
            return cnt, other
        return other, cnt

    def counts(self, As: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return self.counts_from_weights(self.weights(As))

    def min_distances(self, As: np.ndarray) -> np.ndarray:
        primal, _ = self.counts(As)
        return first_nonzero_weight(primal)


def first_nonzero_weight(counts: np.ndarray) -> np.ndarray:
    """Per-row index of the first nonzero count at weight >= 1 (0 if none)."""
    nz = counts[:, 1:] > 0
    return np.where(nz.any(axis=1), nz.argmax(axis=1) + 1, 0).astype(np.int32)
