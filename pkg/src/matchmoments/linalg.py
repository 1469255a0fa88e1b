"""Fraction-free exact linear algebra over the integers."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Row-echelon form by Bareiss' fraction-free elimination.

    Returns the echelon rows (only the nonzero ones) and the pivot column of
    each.  All intermediate entries stay integers; every division is exact.
    """
    a = [list(r) for r in rows]
    if not a:
        return [], []
    m, ncols = len(a), len(a[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            if f == 0:
                # still has to be rescaled to keep the Bareiss quotient exact
                for j in range(c + 1, ncols):
                    ai[j] = ai[j] * p // prev
            else:
                for j in range(c + 1, ncols):
                    ai[j] = (ai[j] * p - f * pr[j]) // prev
            ai[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def integer_nullspace(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the rational nullspace, each vector scaled to primitive integers."""
    if not rows:
        return [[int(i == k) for i in range(ncols)] for k in range(ncols)]
    ech, pivots = bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for row, pc in zip(reversed(ech), reversed(pivots)):
            acc = sum((row[j] * x[j] for j in range(pc + 1, ncols) if x[j]), Fraction(0))
            x[pc] = -acc / row[pc]
        basis.append(_primitive_vector(x))
    return basis


def _primitive_vector(x: list[Fraction]) -> list[int]:
    m = 1
    for v in x:
        m = lcm(m, v.denominator)
    ints = [int(v * m) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints
