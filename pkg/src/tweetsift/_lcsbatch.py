"""All-pairs LCS lengths over a batch of strings.

Single comparisons use the bit-parallel row update on Python integers (see
botdetect.lcs_length). Computing a 500-tweet account's mean dissimilarity
needs C(500,2) = 124,750 comparisons, so the all-pairs path additionally has
a numba kernel that runs the same row update on packed uint64 words across
threads. The kernel is optional: without numba the pure-Python path is used.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

_FORCE_PYTHON = bool(os.environ.get("TWEETSIFT_PURE_PYTHON"))
_kernel = None
_kernel_failed = False


def char_masks(text: str) -> dict[str, int]:
    """Per-character bitmasks: bit i of masks[c] is set iff text[i] == c."""
    masks: dict[str, int] = {}
    for i, ch in enumerate(text):
        masks[ch] = masks.get(ch, 0) | (1 << i)
    return masks


def lcs_from_masks(masks_a: dict[str, int], b: str) -> int:
    """Bit-parallel LCS length given precomputed masks for one side."""
    row = 0
    get = masks_a.get
    for ch in b:
        x = row | get(ch, 0)
        row = x & ~(x - ((row << 1) | 1))
    return row.bit_count()


def _allpairs_python(texts: Sequence[str]) -> np.ndarray:
    n = len(texts)
    out = np.zeros(n * (n - 1) // 2, dtype=np.int64)
    masks = [char_masks(t) for t in texts]
    p = 0
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            # iterate over the shorter string; masks are symmetric in role
            if len(texts[j]) < len(texts[i]):
                out[p] = lcs_from_masks(masks[j], texts[i])
            else:
                out[p] = lcs_from_masks(mi, texts[j])
            p += 1
    return out


def _encode(texts: Sequence[str]):
    alphabet = sorted(set().union(*(set(t) for t in texts)) if texts else ())
    cmap = {c: k for k, c in enumerate(alphabet)}
    n = len(texts)
    lens = np.array([len(t) for t in texts], dtype=np.int64)
    max_len = int(lens.max()) if n else 0
    n_words = max(1, (max_len + 63) // 64)
    codes = np.zeros((n, max(max_len, 1)), dtype=np.int32)
    masks = np.zeros((n, max(len(alphabet), 1), n_words), dtype=np.uint64)
    for i, t in enumerate(texts):
        for k, ch in enumerate(t):
            c = cmap[ch]
            codes[i, k] = c
            masks[i, c, k >> 6] |= np.uint64(1) << np.uint64(k & 63)
    return codes, lens, masks


def _build_kernel():
    import numba
    from numba import njit, prange

    u64 = numba.uint64

    @njit(cache=True, parallel=True)
    def kernel(codes, lens, masks, out):  # pragma: no cover - compiled
        n = codes.shape[0]
        n_words = masks.shape[2]
        n_pairs = n * (n - 1) // 2
        for p in prange(n_pairs):
            # unrank flat pair index p into (i, j) with i < j
            i = 0
            acc = 0
            while acc + (n - 1 - i) <= p:
                acc += n - 1 - i
                i += 1
            j = p - acc + i + 1
            row = np.zeros(n_words, np.uint64)
            x = np.zeros(n_words, np.uint64)
            y = np.zeros(n_words, np.uint64)
            for k in range(lens[j]):
                c = codes[j, k]
                for w in range(n_words):
                    x[w] = row[w] | masks[i, c, w]
                # y = (row << 1) | 1, multiword
                carry = u64(1)
                for w in range(n_words):
                    high = row[w] >> u64(63)
                    y[w] = (row[w] << u64(1)) | carry
                    carry = high
                # y = x - y, multiword borrow
                borrow = u64(0)
                for w in range(n_words):
                    xv = x[w]
                    yv = y[w]
                    d = xv - yv - borrow
                    if xv < yv or (xv == yv and borrow == u64(1)):
                        borrow = u64(1)
                    else:
                        borrow = u64(0)
                    y[w] = d
                for w in range(n_words):
                    row[w] = x[w] & ~y[w]
            cnt = 0
            for w in range(n_words):
                v = row[w]
                while v:
                    v &= v - u64(1)
                    cnt += 1
            out[p] = cnt

    return kernel


def _get_kernel():
    global _kernel, _kernel_failed
    if _kernel is None and not _kernel_failed:
        try:
            _kernel = _build_kernel()
        except Exception:
            _kernel_failed = True
    return _kernel


def allpairs_lcs(texts: Sequence[str]) -> np.ndarray:
    """LCS lengths for all unordered pairs, flat in (i, j) i<j order."""
    n = len(texts)
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    n_pairs = n * (n - 1) // 2
    if not _FORCE_PYTHON and n_pairs >= 64:
        kernel = _get_kernel()
        if kernel is not None:
            codes, lens, masks = _encode(texts)
            out = np.zeros(n_pairs, dtype=np.int64)
            kernel(codes, lens, masks, out)
            return out
    return _allpairs_python(texts)
