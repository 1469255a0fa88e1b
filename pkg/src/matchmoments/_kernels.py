"""Hot numeric loops, each in a numba flavour and a pure-numpy flavour.

The public names at the bottom of the module dispatch on
:data:`matchmoments._numba_utils.NUMBA_ENABLED`.  Both flavours are always
importable (``*_numba`` / ``*_numpy``) so tests and the benchmark can compare
them directly.

Conventions shared with :mod:`matchmoments.oracle`: individuals are labelled
``0 .. 4n-1``; labels below ``2n`` are men, the rest women.
"""
import numpy as np

from ._numba_utils import NUMBA_ENABLED, njit

# largest prime below 2**31: products of two residues fit in int64
MODULUS = 2147483647


# -- rank of an integer matrix modulo MODULUS ---------------------------------

@njit(cache=True, nogil=True)
def _powmod(a, e, p):
    result = 1
    a %= p
    while e > 0:
        if e & 1:
            result = (result * a) % p
        a = (a * a) % p
        e >>= 1
    return result


@njit(cache=True, nogil=True)
def rank_mod_p_numba(mat, p):
    a = mat.copy()
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        piv = -1
        for i in range(rank, rows):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = a[piv, j]
                a[piv, j] = a[rank, j]
                a[rank, j] = tmp
        inv = _powmod(a[rank, col], p - 2, p)
        for j in range(col, cols):
            a[rank, j] = (a[rank, j] * inv) % p
        for i in range(rank + 1, rows):
            f = a[i, col]
            if f != 0:
                for j in range(col, cols):
                    a[i, j] = (a[i, j] - f * a[rank, j]) % p
        rank += 1
    return rank


def rank_mod_p_numpy(mat, p):
    a = np.array(mat, dtype=np.int64, copy=True)
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        f = a[rank + 1:, col].copy()
        a[rank + 1:, col:] = (a[rank + 1:, col:] - f[:, None] * a[rank, col:][None, :]) % p
        rank += 1
    return rank


# -- exhaustive enumeration of perfect matchings ------------------------------

@njit(cache=True, nogil=True)
def enumerate_counts_numba(four_n):
    """Histogram of same-sex pair counts over all perfect matchings.

    Depth-first over "pair the lowest unmatched individual with each later
    unmatched candidate", with the running same-sex count carried per level.
    """
    two_n = four_n // 2
    pairs = four_n // 2
    hist = np.zeros(pairs + 1, np.int64)
    used = np.zeros(four_n, np.bool_)
    first = np.zeros(pairs, np.int64)
    partner = np.zeros(pairs, np.int64)
    same = np.zeros(pairs + 1, np.int64)
    d = 0
    first[0] = 0
    partner[0] = 0
    used[0] = True
    while d >= 0:
        f = first[d]
        p = partner[d]
        if p > f:
            used[p] = False
            c = p + 1
        else:
            c = f + 1
        while c < four_n and used[c]:
            c += 1
        if c == four_n:
            used[f] = False
            d -= 1
            continue
        partner[d] = c
        used[c] = True
        s = same[d]
        if (f < two_n) == (c < two_n):
            s += 1
        if d == pairs - 1:
            hist[s] += 1
        else:
            nf = f + 1
            while used[nf]:
                nf += 1
            d += 1
            first[d] = nf
            partner[d] = nf
            used[nf] = True
            same[d] = s
    return hist


def enumerate_counts_numpy(four_n):
    """Breadth-first version: expand every partial matching one pair per level."""
    two_n = four_n // 2
    dtype = np.int16 if four_n > 120 else np.int8
    remaining = np.arange(four_n, dtype=dtype)[None, :]
    same = np.zeros(1, dtype=np.int64)
    is_man = lambda x: x < two_n  # noqa: E731
    while remaining.shape[1] > 0:
        width = remaining.shape[1]
        head = remaining[:, 0]
        next_rem, next_same = [], []
        for j in range(1, width):
            cand = remaining[:, j]
            keep = np.ones(width, dtype=bool)
            keep[[0, j]] = False
            next_rem.append(remaining[:, keep])
            next_same.append(same + (is_man(head) == is_man(cand)))
        remaining = np.concatenate(next_rem, axis=0)
        same = np.concatenate(next_same)
    return np.bincount(same, minlength=four_n // 2 + 1).astype(np.int64)


# -- sequential uniform sampling ----------------------------------------------
#
# draws[t, s] is uniform on [0, 4n-1-2s): at step s the working array holds
# the unmatched individuals in positions 2s.., position 2s is paired with the
# one at 2s+1+draws[t, s] (which is swapped into 2s+1).

def draw_bounds(four_n):
    return np.arange(four_n - 1, 0, -2, dtype=np.int64)


@njit(cache=True, nogil=True)
def sample_counts_numba(draws, four_n):
    two_n = four_n // 2
    trials, steps = draws.shape
    out = np.zeros(trials, np.int64)
    work = np.empty(four_n, np.int64)
    for t in range(trials):
        for i in range(four_n):
            work[i] = i
        s_count = 0
        for s in range(steps):
            lo = 2 * s
            k = lo + 1 + draws[t, s]
            tmp = work[lo + 1]
            work[lo + 1] = work[k]
            work[k] = tmp
            if (work[lo] < two_n) == (work[lo + 1] < two_n):
                s_count += 1
        out[t] = s_count
    return out


def pairings_from_draws(draws, four_n):
    """Apply draws to get the explicit matchings, shape (trials, 2n, 2)."""
    trials, steps = draws.shape
    work = np.broadcast_to(np.arange(four_n, dtype=np.int64), (trials, four_n)).copy()
    rows = np.arange(trials)
    for s in range(steps):
        lo = 2 * s
        k = lo + 1 + draws[:, s]
        a = work[rows, lo + 1].copy()
        work[rows, lo + 1] = work[rows, k]
        work[rows, k] = a
    return work.reshape(trials, steps, 2)


def sample_counts_numpy(draws, four_n):
    pairs = pairings_from_draws(np.asarray(draws, dtype=np.int64), four_n)
    men = pairs < four_n // 2
    return np.count_nonzero(men[:, :, 0] == men[:, :, 1], axis=1).astype(np.int64)


if NUMBA_ENABLED:
    rank_mod_p = rank_mod_p_numba
    enumerate_counts = enumerate_counts_numba
    sample_counts = sample_counts_numba
else:
    rank_mod_p = rank_mod_p_numpy
    enumerate_counts = enumerate_counts_numpy
    sample_counts = sample_counts_numpy
