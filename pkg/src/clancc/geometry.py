"""Moment-map images of conormal bundle closures and geometric cells.

Every orbit support maps under the moment map onto the closure of a rank
stratum O_k of symmetric n x n matrices.  The index k is computed two
ways: a closed head/tail recursion on the clan, and a randomized oracle
that materializes the supporting root pattern as a symmetric matrix over
a large prime field and measures its generic rank.
"""

from __future__ import annotations

import hashlib
import random
from math import comb

from .clans import PLUS, Clan, all_clans, w_from_clan
from .weyl import SignedPermutation, act, in_script_w, is_positive_root, positive_roots

# Fixed 61-bit Mersenne prime: one Schwartz-Zippel trial fails with
# probability at most n/p, so five trials put failures below 1e-16.
DEFAULT_PRIME = (1 << 61) - 1
DEFAULT_TRIALS = 5
DEFAULT_SEED = 2024


def root_pattern(w: SignedPermutation) -> frozenset[tuple[int, int]]:
    """Unordered pairs (i, j), i <= j, with e_i + e_j supporting the orbital variety.

    These are the positive roots beta with w^{-1}(beta) positive.  For
    elements of the highest weight family every such root must be of the
    noncompact form e_i + e_j; this is asserted rather than assumed.
    """
    if not in_script_w(w):
        raise ValueError(f"{w} is not the support of a highest weight module")
    inv = _inverse(w)
    pairs = set()
    for beta in positive_roots(w.n):
        if is_positive_root(act(inv, beta)):
            support = [i + 1 for i, coef in enumerate(beta) if coef]
            if len(support) == 2 and sum(beta) == 2:
                pairs.add((support[0], support[1]))
            elif len(support) == 1 and beta[support[0] - 1] == 2:
                pairs.add((support[0], support[0]))
            else:
                raise AssertionError(
                    f"orbital variety of {w} leaves the symmetric-matrix space "
                    f"at root {beta}"
                )
    return frozenset(pairs)


def _inverse(w: SignedPermutation) -> SignedPermutation:
    entries = [0] * w.n
    for j, e in enumerate(w.entries, start=1):
        if e > 0:
            entries[e - 1] = j
        else:
            entries[-e - 1] = -j
    return SignedPermutation(tuple(entries))


def rank_recursive(c: Clan) -> int:
    """Rank index of the moment-map image, by the head/tail recursion.

    Empty clan: 0.  A leading number leaves the index unchanged; a leading
    ``+`` adds two, capped at the current size.  Evaluated right to left
    over suffixes, so no recursion or memo is needed.
    """
    r = 0
    size = 0
    for s in reversed(c.slots):
        size += 1
        if s == PLUS:
            r = min(r + 2, size)
    return r


def gf_rank(matrix: list[list[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination on exact Python ints."""
    rows = [row[:] for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] % p:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _trial_rng(seed: int, trial: int, c: Clan) -> random.Random:
    """Independent, order-insensitive per-trial generator.

    Built from a cryptographic digest so results do not depend on Python's
    salted string hashing or on the order clans are visited.
    """
    digest = hashlib.blake2b(
        f"{seed}:{trial}:{c.to_text()}".encode(), digest_size=8
    ).digest()
    return random.Random(int.from_bytes(digest, "big"))


def rank_oracle(
    c: Clan,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int = DEFAULT_PRIME,
) -> int:
    """Generic rank of the root-pattern matrix space, measured empirically.

    Each trial fills the pattern positions of a symmetric n x n matrix with
    shared uniform nonzero field elements and takes the GF(p) rank; the
    maximum over trials underestimates the true generic rank only with the
    per-trial Schwartz-Zippel probability.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    pattern = root_pattern(w_from_clan(c))
    n = c.n
    best = 0
    for trial in range(trials):
        rng = _trial_rng(seed, trial, c)
        matrix = [[0] * n for _ in range(n)]
        for i, j in sorted(pattern):
            value = rng.randrange(1, prime)
            matrix[i - 1][j - 1] = value
            matrix[j - 1][i - 1] = value
        best = max(best, gf_rank(matrix, prime))
    return best


def geometric_cell_members(n: int, k: int) -> set[Clan]:
    """All clans of size n whose moment-map image is the rank-k closure."""
    if not 0 <= k <= n:
        raise ValueError(f"orbit index {k} out of range 0..{n}")
    return {c for c in all_clans(n) if rank_recursive(c) == k}


def geometric_cell_size(n: int, k: int) -> int:
    """Closed form C(n, floor(k/2)) for the geometric cell cardinality."""
    if not 0 <= k <= n:
        raise ValueError(f"orbit index {k} out of range 0..{n}")
    return comb(n, k // 2)
