"""Exact partition combinatorics and GL(n) weight arithmetic.

Partitions are plain tuples of nonincreasing nonnegative integers with
trailing zeros stripped.  Dominant weights are nonincreasing integer tuples
(negative entries allowed) paired with an explicit rank wherever the rank
matters.  Everything here is pure and exact: Python integers only.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional


def partition(parts: Iterable[int]) -> tuple:
    """Normalize an iterable of parts into a partition tuple.

    Trailing zeros are stripped; raises on negative or increasing parts.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for k in range(len(p) - 1):
        if p[k] < p[k + 1]:
            raise ValueError(f"parts not nonincreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    return p


def conjugate(p: tuple) -> tuple:
    """Transpose of the Young diagram (an involution)."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def fits_in_box(p: tuple, rows: int, cols: int) -> bool:
    """True iff p has at most `rows` parts, each at most `cols`."""
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be nonnegative")
    return len(p) <= rows and (not p or p[0] <= cols)


@lru_cache(maxsize=None)
def partitions_in_box(rows: int, cols: int) -> tuple:
    """All partitions inside a rows x cols box, sorted by (size, colex)."""
    out = []

    def grow(prefix, prev):
        out.append(prefix)
        if len(prefix) == rows:
            return
        for part in range(1, prev + 1):
            grow(prefix + (part,), part)

    if rows > 0 and cols > 0:
        grow((), cols)
    else:
        out.append(())
    out.sort(key=lambda p: (sum(p), tuple(reversed(p))))
    return tuple(out)


def dominant(entries: Iterable[int]) -> tuple:
    """Validate a nonincreasing integer sequence (a dominant GL weight)."""
    w = tuple(int(x) for x in entries)
    for k in range(len(w) - 1):
        if w[k] < w[k + 1]:
            raise ValueError(f"weight not nonincreasing: {w}")
    return w


def dual_weight(w: Iterable[int], n: int) -> tuple:
    """Highest weight of the dual representation: negate and reverse at rank n."""
    w = dominant(w)
    if len(w) > n:
        raise ValueError(f"weight {w} longer than rank {n}")
    full = w + (0,) * (n - len(w))
    return tuple(-x for x in reversed(full))


@lru_cache(maxsize=None)
def weyl_dimension(w: tuple, n: int) -> int:
    """Dimension of the irreducible GL(n) representation with highest weight w.

    Product formula over pairs i<j of (w_i - w_j + j - i)/(j - i); shift
    invariant.  A partition with more than n (nonzero) rows has dimension 0.
    """
    w = dominant(w)
    while w and w[-1] == 0:
        w = w[:-1]
    if len(w) > n:
        if w[-1] > 0:
            return 0
        raise ValueError(f"weight {w} does not fit rank {n}")
    full = w + (0,) * (n - len(w))
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= full[i] - full[j] + j - i
            den *= j - i
    return num // den


# ---------------------------------------------------------------------------
# Littlewood-Richardson products.
#
# The expansion of S_lam * S_mu is computed by adding the letters of mu to
# the diagram of lam one value at a time.  Placing the k-th letter adds a
# horizontal strip, and the lattice-word condition on the reverse reading
# word becomes: the number of k's in rows 1..j never exceeds the number of
# (k-1)'s in rows 1..j-1.  States that agree on (shape, row profile of the
# last letter) are merged, so coefficients accumulate without materializing
# individual tableaux.
# ---------------------------------------------------------------------------


def _distribute(shape, prev_rows, count, cap, inside):
    """Yield (new_shape, rows_placed) for adding `count` boxes of one letter."""
    max_row = min(cap, len(shape) + 1)
    results = []

    def place(j, remaining, cum_prev, acc_shape, acc_rows):
        if remaining == 0:
            new_shape = acc_shape + shape[j - 1:]
            results.append((partition(new_shape), tuple(acc_rows) + (0,) * (cap - len(acc_rows))))
            return
        if j > max_row:
            return
        row_val = shape[j - 1] if j <= len(shape) else 0
        hi = remaining
        if j >= 2:
            hi = min(hi, shape[j - 2] - row_val)
        if inside is not None:
            bound = inside[j - 1] if j <= len(inside) else 0
            hi = min(hi, bound - row_val)
        if prev_rows is not None:
            # lattice: cumulative count through row j is capped by the
            # previous letter's cumulative count through row j-1
            hi = min(hi, cum_prev - sum(acc_rows))
        for x in range(min(hi, remaining), -1, -1):
            next_cum = cum_prev + (prev_rows[j - 1] if prev_rows is not None and j <= len(prev_rows) else 0)
            place(j + 1, remaining - x, next_cum, acc_shape + (row_val + x,), acc_rows + (x,))

    place(1, count, 0, (), ())
    return results


@lru_cache(maxsize=None)
def _lr_product(lam: tuple, mu: tuple, cap: int, inside: Optional[tuple]) -> dict:
    states = {(lam, None): 1}
    for k in range(len(mu)):
        nxt: dict = {}
        for (shape, prev_rows), mult in states.items():
            for new_shape, rows in _distribute(shape, prev_rows, mu[k], cap, inside):
                key = (new_shape, rows)
                nxt[key] = nxt.get(key, 0) + mult
        states = nxt
    out: dict = {}
    for (shape, _), mult in states.items():
        out[shape] = out.get(shape, 0) + mult
    return out


def lr_expand(lam, mu, max_rows: Optional[int] = None, inside=None) -> dict:
    """Littlewood-Richardson expansion of S_lam * S_mu.

    Returns a map {nu: coefficient}.  `max_rows` caps the number of rows of
    the shapes produced; `inside` restricts to shapes contained in a given
    partition.  The result is memoized; treat it as read-only.
    """
    lam = partition(lam)
    mu = partition(mu)
    cap = len(lam) + len(mu)
    if max_rows is not None:
        cap = min(cap, max_rows)
    if inside is not None:
        inside = partition(inside)
        cap = min(cap, len(inside))
    if len(lam) > cap:
        return {}
    return _lr_product(lam, mu, cap, inside)


def lr_coefficient(lam, mu, nu) -> int:
    """Multiplicity of S_nu inside S_lam * S_mu."""
    lam = partition(lam)
    mu = partition(mu)
    nu = partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if any((lam[k] if k < len(lam) else 0) > nu[k] for k in range(len(lam))):
        return 0
    return lr_expand(lam, mu, inside=nu).get(nu, 0)
