"""Harish-Chandra cells and their dimension bookkeeping.

A cell is labeled by the orbit index of its associated variety; only even
indices and k = n occur.  Cells are handled extensionally as sets of
clans, with the representation-theoretic sizes reduced to their binomial
values.
"""

from __future__ import annotations

from math import comb

from .clans import Clan, all_clans
from .geometry import rank_recursive


def hc_cell_index(c: Clan) -> int:
    """Cell index: the geometric index, rounded up to even unless it is n."""
    r = rank_recursive(c)
    if r % 2 == 0 or r == c.n:
        return r
    return r + 1


def legal_cell_indices(n: int) -> list[int]:
    """Indices that occur: even k in 0..n, plus k = n when n is odd."""
    out = list(range(0, n + 1, 2))
    if n % 2 == 1:
        out.append(n)
    return out


def _check_cell_index(n: int, k: int) -> None:
    if k not in legal_cell_indices(n):
        raise ValueError(f"no Harish-Chandra cell with index {k} at rank {n}")


def hc_cell_members(n: int, k: int) -> set[Clan]:
    """All clans in the cell: geometric cells k and k-1 for even k > 0."""
    _check_cell_index(n, k)
    return {c for c in all_clans(n) if hc_cell_index(c) == k}


def springer_dim(n: int, k: int) -> int:
    """Dimension C(n, floor(k/2)) of the Weyl representation of the orbit."""
    if not 0 <= k <= n:
        raise ValueError(f"orbit index {k} out of range 0..{n}")
    return comb(n, k // 2)


def cell_rep_dim(n: int, k: int) -> int:
    """Dimension of the cell representation; equals the cell size."""
    _check_cell_index(n, k)
    if k == 0:
        return 1
    if k % 2 == 0:
        return springer_dim(n, k) + springer_dim(n, k - 1)
    return springer_dim(n, n)


def hc_cell_size(n: int, k: int) -> int:
    """Closed form for the cell size: C(n+1, k/2) even k, C(n, (n-1)/2) odd n."""
    _check_cell_index(n, k)
    if k % 2 == 0:
        return comb(n + 1, k // 2)
    return comb(n, (n - 1) // 2)
