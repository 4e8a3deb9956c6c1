"""Exact arithmetic in the Weyl group of type C_n (signed permutations).

An element is written in short form ``w = (w_1 .. w_n)`` acting by
``w(e_j) = e_{w_j}`` for ``w_j > 0`` and ``w(e_j) = -e_{-w_j}`` for
``w_j < 0``.  Roots are coefficient vectors over the basis ``e_1..e_n``.

The module provides three independent Bruhat order tests (sorted-prefix
comparison of long forms, entrywise b-matrix domination, and the a-vector
criterion valid on the distinguished subset of 2^n elements that support
highest weight Harish-Chandra modules).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

Root = tuple[int, ...]


@dataclass(frozen=True)
class SignedPermutation:
    """Type-C Weyl group element in short (one-line signed) form."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if sorted(abs(e) for e in self.entries) != list(range(1, n + 1)):
            raise ValueError(
                f"entries {self.entries} are not a signed permutation of 1..{n}"
            )

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str) -> "SignedPermutation":
        """Parse comma-separated signed integers, e.g. ``"5,-1,-2,4,3"``."""
        try:
            entries = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse signed permutation from {text!r}")
        return cls(entries)

    def to_text(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def __str__(self) -> str:
        return self.to_text()


def act(w: SignedPermutation, beta: Root) -> Root:
    """Apply ``w`` to a root given as a coefficient vector."""
    if len(beta) != w.n:
        raise ValueError("root length does not match rank")
    out = [0] * w.n
    for j, coef in enumerate(beta):
        if coef:
            t = w.entries[j]
            if t > 0:
                out[t - 1] += coef
            else:
                out[-t - 1] -= coef
    return tuple(out)


def eps(n: int, i: int, ci: int = 1, j: int = 0, cj: int = 0) -> Root:
    """Root ``ci*e_i + cj*e_j`` (1-indexed)."""
    out = [0] * n
    out[i - 1] += ci
    if j:
        out[j - 1] += cj
    return tuple(out)


def positive_roots(n: int) -> list[Root]:
    """All n^2 positive roots: e_i - e_j (i < j) and e_i + e_j (i <= j)."""
    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(eps(n, i, 1, j, -1))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            roots.append(eps(n, i, 1, j, 1) if i != j else eps(n, i, 2))
    return roots


def simple_root(n: int, j: int) -> Root:
    """Simple root alpha_j: e_j - e_{j+1} for j < n, 2*e_n for j = n."""
    if not 1 <= j <= n:
        raise ValueError(f"simple root index {j} out of range 1..{n}")
    if j < n:
        return eps(n, j, 1, j + 1, -1)
    return eps(n, n, 2)


def is_positive_root(beta: Root) -> bool:
    for coef in beta:
        if coef:
            return coef > 0
    return False


def length(w: SignedPermutation) -> int:
    """Number of positive roots sent negative; the Schubert cell dimension."""
    return sum(1 for beta in positive_roots(w.n) if not is_positive_root(act(w, beta)))


def tau(w: SignedPermutation) -> frozenset[int]:
    """Indices j of simple roots with w(alpha_j) < 0."""
    return frozenset(
        j
        for j in range(1, w.n + 1)
        if not is_positive_root(act(w, simple_root(w.n, j)))
    )


def multiply_simple(w: SignedPermutation, j: int) -> SignedPermutation:
    """Right multiplication w*s_j: swap entries j, j+1 (j < n) or negate entry n."""
    e = list(w.entries)
    if j < w.n:
        e[j - 1], e[j] = e[j], e[j - 1]
    else:
        e[-1] = -e[-1]
    return SignedPermutation(tuple(e))


def in_script_w(w: SignedPermutation) -> bool:
    """Membership in the 2^n-element family supporting highest weight modules.

    True iff the negative entries read left to right are exactly
    -1, -2, ..., -k and the positive entries read left to right are
    n, n-1, ..., k+1, for some 0 <= k <= n.
    """
    negatives = [e for e in w.entries if e < 0]
    positives = [e for e in w.entries if e > 0]
    k = len(negatives)
    return negatives == [-(i + 1) for i in range(k)] and positives == list(
        range(w.n, k, -1)
    )


def script_w_elements(n: int) -> Iterator[SignedPermutation]:
    """All 2^n members, generated directly from the choice of negative slots."""
    for mask in itertools.product((False, True), repeat=n):
        entries = []
        neg = 0
        pos = n
        for is_neg in mask:
            if is_neg:
                neg += 1
                entries.append(-neg)
            else:
                entries.append(pos)
                pos -= 1
        yield SignedPermutation(tuple(entries))


def long_form(w: SignedPermutation) -> tuple[int, ...]:
    """Embedding into S_2n: u_j = w_j or 2n+w_j+1, with u_j + u_{2n-j+1} = 2n+1."""
    n = w.n
    half = [e if e > 0 else 2 * n + e + 1 for e in w.entries]
    return tuple(half + [2 * n + 1 - u for u in reversed(half)])


def short_form(u: tuple[int, ...]) -> SignedPermutation:
    """Inverse of :func:`long_form`, validating the mirror symmetry."""
    if len(u) % 2:
        raise ValueError("long form must have even length")
    n = len(u) // 2
    if sorted(u) != list(range(1, 2 * n + 1)):
        raise ValueError("long form is not a permutation of 1..2n")
    for j in range(n):
        if u[j] + u[2 * n - j - 1] != 2 * n + 1:
            raise ValueError(f"long form breaks the symmetry at position {j + 1}")
    return SignedPermutation(tuple(x if x <= n else x - 2 * n - 1 for x in u[:n]))


def long_form_text(w: SignedPermutation) -> str:
    """Long form printed with a '|' after position n."""
    u = long_form(w)
    n = w.n
    left = " ".join(str(x) for x in u[:n])
    right = " ".join(str(x) for x in u[n:])
    return f"{left}|{right}"


def bruhat_leq_longform(y: SignedPermutation, w: SignedPermutation) -> bool:
    """Sorted-prefix comparison of the long forms, over every prefix length.

    Prefix lengths beyond n are redundant by the mirror symmetry of the long
    form but are kept as a guard.
    """
    if y.n != w.n:
        raise ValueError("rank mismatch")
    uy, uw = long_form(y), long_form(w)
    py: list[int] = []
    pw: list[int] = []
    for k in range(2 * y.n):
        _insort(py, uy[k])
        _insort(pw, uw[k])
        if any(a > b for a, b in zip(py, pw)):
            return False
    return True


def _insort(lst: list[int], x: int) -> None:
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, x)


def b_matrix_full(w: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    """Full 2n x 2n table b_{ij} = #{l <= i : u_l <= j} of the long form."""
    u = long_form(w)
    m = 2 * w.n
    rows = []
    counts = [0] * (m + 1)
    for i in range(m):
        for j in range(u[i], m + 1):
            counts[j] += 1
        rows.append(tuple(counts[1:]))
    return tuple(rows)


def b_matrix(w: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    """Upper-left n x n block of the full table; determines the Bruhat order."""
    n = w.n
    return tuple(row[:n] for row in b_matrix_full(w)[:n])


def bruhat_leq_bmatrix(y: SignedPermutation, w: SignedPermutation) -> bool:
    """y <= w iff b(y) >= b(w) entrywise on the n x n block."""
    if y.n != w.n:
        raise ValueError("rank mismatch")
    by, bw = b_matrix(y), b_matrix(w)
    return all(by[i][j] >= bw[i][j] for i in range(y.n) for j in range(y.n))


def a_vector(w: SignedPermutation) -> tuple[int, ...]:
    """Prefix counts of positive entries; defined on the 2^n-element family only."""
    if not in_script_w(w):
        raise ValueError(f"{w} is not the support of a highest weight module")
    out = []
    count = 0
    for e in w.entries:
        if e > 0:
            count += 1
        out.append(count)
    return tuple(out)


def bruhat_leq_avector(y: SignedPermutation, w: SignedPermutation) -> bool:
    """y <= w iff a(y) >= a(w) componentwise; both must be in the family."""
    if y.n != w.n:
        raise ValueError("rank mismatch")
    return all(ay >= aw for ay, aw in zip(a_vector(y), a_vector(w)))
