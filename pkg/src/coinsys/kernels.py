"""Hot integer kernels shared by the solvers, the canonicity scans and the sweeps.

Each kernel is a plain function over numpy int64 scalars/arrays, written so the
exact same source compiles under numba's @njit.  The backend is chosen once at
import time from the COINSYS_BACKEND environment variable:

    COINSYS_BACKEND=numba   force JIT compilation (error if numba is missing)
    COINSYS_BACKEND=numpy   run the uncompiled fallback (identical results)
    unset / "auto"          numba when importable, numpy otherwise

Values handled here stay below 2*c_n of a validated system, so int64 never
overflows (construction rejects systems where 2*c_n would).
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None
    _HAVE_NUMBA = False

INF = 1 << 60


def _pick_backend() -> str:
    env = os.environ.get("COINSYS_BACKEND", "auto").strip().lower()
    if env in ("", "auto"):
        return "numba" if _HAVE_NUMBA else "numpy"
    if env in ("numba", "jit"):
        if not _HAVE_NUMBA:
            raise ImportError("COINSYS_BACKEND=numba but numba is not importable")
        return "numba"
    if env in ("numpy", "python", "nojit"):
        return "numpy"
    raise ValueError(f"unrecognized COINSYS_BACKEND value: {env!r}")


BACKEND = _pick_backend()


def _jit(fn):
    if BACKEND == "numba":
        return njit(cache=True)(fn)
    return fn


@_jit
def greedy_counts(coins, v):
    """Per-denomination counts of the greedy payment of v (largest coin first)."""
    n = coins.shape[0]
    out = np.zeros(n, np.int64)
    rem = v
    for i in range(n - 1, -1, -1):
        c = coins[i]
        if c <= rem:
            k = rem // c
            out[i] = k
            rem -= k * c
    return out


@_jit
def greedy_total(coins, v):
    """Total number of coins the greedy payment of v uses."""
    total = 0
    rem = v
    for i in range(coins.shape[0] - 1, -1, -1):
        c = coins[i]
        if c <= rem:
            total += rem // c
            rem -= (rem // c) * c
    return total


@_jit
def opt_table(coins, vmax):
    """Minimum-coin DP table for values 0..vmax; feasible everywhere since c1 = 1."""
    n = coins.shape[0]
    dp = np.empty(vmax + 1, np.int64)
    dp[0] = 0
    for t in range(1, vmax + 1):
        best = INF
        for i in range(n):
            c = coins[i]
            if c > t:
                break
            cand = dp[t - c] + 1
            if cand < best:
                best = cand
        dp[t] = best
    return dp


@_jit
def _scan_window(coins, lo, hi, dp):
    # First w in [lo, hi] with opt(w) < grd(w), else 0.  dp is scratch of
    # length >= hi + 1; the table is filled incrementally so the scan can
    # return as soon as a counterexample appears.
    if hi < lo:
        return 0
    n = coins.shape[0]
    dp[0] = 0
    for t in range(1, hi + 1):
        best = INF
        for i in range(n):
            c = coins[i]
            if c > t:
                break
            cand = dp[t - c] + 1
            if cand < best:
                best = cand
        dp[t] = best
        if t >= lo:
            g = 0
            rem = t
            for i in range(n - 1, -1, -1):
                c = coins[i]
                if c <= rem:
                    g += rem // c
                    rem -= (rem // c) * c
            if best < g:
                return t
    return 0


@_jit
def first_counterexample(coins, lo, hi):
    """Smallest w in [lo, hi] where the greedy payment is suboptimal, 0 if none."""
    if hi < lo:
        return 0
    dp = np.empty(hi + 1, np.int64)
    return _scan_window(coins, lo, hi, dp)


@_jit
def suffix_min_table(coins, v):
    """Row i = minimum coins for each value 0..v using only coins[i:] (INF if infeasible)."""
    n = coins.shape[0]
    tab = np.full((n + 1, v + 1), INF, np.int64)
    tab[n, 0] = 0
    for i in range(n - 1, -1, -1):
        c = coins[i]
        for t in range(v + 1):
            best = tab[i + 1, t]
            if c <= t:
                cand = tab[i, t - c] + 1
                if cand < best:
                    best = cand
            tab[i, t] = best
    return tab


@_jit
def lex_smallest_counts(coins, v):
    """Counts of the lexicographically smallest optimal representation of v.

    Walks the coins in index order, taking for each the fewest copies that
    still allow the remaining suffix to finish with exactly the remaining
    budget.  A suffix can do so iff its minimum equals that budget: any tail
    of an optimal representation is itself optimal for the suffix coin set,
    otherwise the whole representation could be improved.
    """
    n = coins.shape[0]
    tab = suffix_min_table(coins, v)
    out = np.zeros(n, np.int64)
    r = v
    k = tab[0, v]
    for i in range(n):
        c = coins[i]
        limit = r // c
        if k < limit:
            limit = k
        for x in range(limit + 1):
            rr = r - x * c
            if tab[i + 1, rr] == k - x:
                out[i] = x
                r = rr
                k -= x
                break
    return out


@_jit
def pearson_min_certified(coins):
    """Smallest candidate value certified as a counterexample by Pearson's test, 0 if none.

    Candidates come from pairs (i, j), i <= j < n: take the greedy counts of
    c_{j+1} - 1, bump position i by one, zero positions before i and after j.
    The candidate's own coin total bounds opt from above, so total < grd
    certifies a counterexample; the minimum counterexample of a noncanonical
    system is always among the candidates.
    """
    n = coins.shape[0]
    best = INF
    for j in range(n - 1):
        g = greedy_counts(coins, coins[j + 1] - 1)
        for i in range(j + 1):
            val = coins[i] * (g[i] + 1)
            tot = g[i] + 1
            for m in range(i + 1, j + 1):
                val += coins[m] * g[m]
                tot += g[m]
            if val < best and tot < greedy_total(coins, val):
                best = val
    if best == INF:
        return 0
    return best


@_jit
def family_converse_scan(nsys, bound, max_violations):
    """Sweep every system (1, c2..c_{n-1}, 2c_{n-1} - c2) with last coin <= bound.

    For each, checks that "canonical with noncanonical (n-1)-prefix" holds
    exactly for the staircase family (1, 2, ..., n-3, a, a+1, 2a) with
    a > n-2.  Returns (violations, n_violations, n_family, n_checked); rows of
    `violations` beyond n_violations are zero padding.
    """
    m = nsys - 2  # free middle coins c2..c_{n-1}
    viol = np.zeros((max_violations, nsys), np.int64)
    nv = 0
    nfam = 0
    nchecked = 0
    coins = np.zeros(nsys, np.int64)
    coins[0] = 1
    idx = np.zeros(m, np.int64)
    dp = np.empty(2 * bound + 2, np.int64)
    for c2 in range(2, bound - 2 * (m - 1) + 1):
        cap = (bound + c2) // 2  # largest admissible c_{n-1}
        if c2 + m - 1 > cap:
            break
        idx[0] = c2
        for i in range(1, m):
            idx[i] = c2 + i
        while True:
            nchecked += 1
            for i in range(m):
                coins[1 + i] = idx[i]
            cn = 2 * idx[m - 1] - c2
            coins[nsys - 1] = cn
            # staircase family shape?
            fam = True
            for i in range(nsys - 3):
                if coins[i] != i + 1:
                    fam = False
                    break
            if fam:
                a = coins[nsys - 3]
                if coins[nsys - 2] != a + 1 or cn != 2 * a or a <= nsys - 2:
                    fam = False
            if fam:
                nfam += 1
            w = _scan_window(coins, coins[2] + 2, coins[nsys - 2] + cn - 1, dp)
            good = False
            if w == 0:
                pre = coins[: nsys - 1]
                pw = _scan_window(pre, pre[2] + 2, pre[nsys - 3] + pre[nsys - 2] - 1, dp)
                good = pw != 0
            if good != fam:
                if nv < max_violations:
                    for i in range(nsys):
                        viol[nv, i] = coins[i]
                nv += 1
            # advance the combination odometer over idx[1..m-1]
            pos = m - 1
            while pos >= 1:
                if idx[pos] < cap - (m - 1 - pos):
                    idx[pos] += 1
                    for t in range(pos + 1, m):
                        idx[t] = idx[pos] + (t - pos)
                    break
                pos -= 1
            if pos == 0:
                break
    return viol, nv, nfam, nchecked
