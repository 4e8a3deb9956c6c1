"""Abbreviated clans and the operators acting on them.

A clan here is the left half of a symmetric K-orbit symbol: ``n`` slots,
each a ``+`` or a number, with the numbers reading 1, 2, ..., k from left
to right (the canonical labeling).  These are exactly the supports of
highest weight Harish-Chandra modules, in bijection with the 2^n signed
permutations handled by :mod:`clancc.weyl`.

Slots are stored as ints: 0 for ``+`` and a >= 1 for the number a.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .weyl import SignedPermutation, in_script_w

PLUS = 0


class ClanParseError(ValueError):
    """Raised when clan text is malformed or not canonically labeled."""


@dataclass(frozen=True)
class Clan:
    """Canonical abbreviated clan; slot 0 in ``slots`` is ``+``."""

    slots: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 1
        for pos, s in enumerate(self.slots, start=1):
            if s < 0:
                raise ClanParseError(f"slot {pos}: negative value {s}")
            if s > 0:
                if s != expected:
                    raise ClanParseError(
                        f"slot {pos}: expected number {expected}, found {s}"
                    )
                expected += 1

    @property
    def n(self) -> int:
        return len(self.slots)

    @property
    def number_count(self) -> int:
        return sum(1 for s in self.slots if s != PLUS)

    def to_text(self) -> str:
        """Compact form for n <= 9, comma-separated tokens otherwise."""
        if self.n <= 9:
            return "".join("+" if s == PLUS else str(s) for s in self.slots)
        return ",".join("+" if s == PLUS else str(s) for s in self.slots)

    def __str__(self) -> str:
        return self.to_text()


def parse_clan(text: str) -> Clan:
    """Parse compact (``"+12++"``) or comma-token (``"+,1,2,+,+"``) clan text."""
    text = text.strip()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = list(text)
    slots = []
    for pos, tok in enumerate(tokens, start=1):
        if tok == "+":
            slots.append(PLUS)
        elif tok.isdigit() and tok != "0":
            slots.append(int(tok))
        else:
            raise ClanParseError(f"slot {pos}: invalid token {tok!r}")
    return Clan(tuple(slots))


def all_clans(n: int) -> Iterator[Clan]:
    """All 2^n canonical clans of size n."""
    for mask in itertools.product((False, True), repeat=n):
        slots = []
        num = 0
        for is_num in mask:
            if is_num:
                num += 1
                slots.append(num)
            else:
                slots.append(PLUS)
        yield Clan(tuple(slots))


def full_clan_text(c: Clan) -> str:
    """Display form of the full 2n-symbol clan, mirror half included.

    The mirror of ``+`` is ``-``; a number pairs with itself at the
    reflected position.
    """
    left = "".join("+" if s == PLUS else str(s) for s in c.slots)
    right = "".join("-" if s == PLUS else str(s) for s in reversed(c.slots))
    return f"{left}|{right}"


# -- bijection with the Weyl group family -----------------------------------


def clan_from_w(w: SignedPermutation) -> Clan:
    """Replace positive entries by ``+`` and each -a by the number a."""
    if not in_script_w(w):
        raise ValueError(f"{w} is not the support of a highest weight module")
    return Clan(tuple(PLUS if e > 0 else -e for e in w.entries))


def w_from_clan(c: Clan) -> SignedPermutation:
    """Numbers a become -a; plus slots receive n, n-1, ... left to right."""
    entries = []
    pos = c.n
    for s in c.slots:
        if s == PLUS:
            entries.append(pos)
            pos -= 1
        else:
            entries.append(-s)
    return SignedPermutation(tuple(entries))


def tau_clan(c: Clan) -> frozenset[int]:
    """Tau-invariant read off the slot pairs.

    For j < n the simple root alpha_j lies in tau iff slots (j, j+1) match
    (+,+), (number,+) or a consecutive number pair; alpha_n lies in tau iff
    slot n is a number.
    """
    out = set()
    for j in range(1, c.n):
        a, b = c.slots[j - 1], c.slots[j]
        if b == PLUS:
            out.add(j)  # covers (+,+) and (number,+)
        elif a != PLUS and b == a + 1:
            out.add(j)
    if c.n and c.slots[-1] != PLUS:
        out.add(c.n)
    return frozenset(out)


def dim(c: Clan) -> int:
    """Dimension of the parametrized orbit (= Schubert cell dimension).

    Inversion count of the corresponding signed permutation, done pairwise
    in O(n^2); agrees with the O(n^3) positive-root scan of
    :func:`clancc.weyl.length` (tested exhaustively for small n).
    """
    w = w_from_clan(c).entries
    n = c.n
    total = sum(1 for a in w if a < 0)  # roots 2e_i
    for i in range(n):
        a = w[i]
        for j in range(i + 1, n):
            b = w[j]
            if a < 0:
                if b > 0 or a > b:  # e_i - e_j lands negative
                    total += 1
                if b < 0 or b > -a:  # e_i + e_j lands negative
                    total += 1
            else:
                if 0 < b < a:
                    total += 1
                if b < 0 and -b < a:
                    total += 1
    return total


# -- orbit operations --------------------------------------------------------


def s_op(c: Clan, j: int) -> Optional[Clan]:
    """Dimension-raising orbit operation at the simple root alpha_j.

    Defined iff slots (j, j+1) are (+, number), which swap, or j = n with
    slot n a ``+``, which becomes the next unused number.  Returns None
    when undefined.
    """
    if not 1 <= j <= c.n:
        raise ValueError(f"simple index {j} out of range 1..{c.n}")
    slots = list(c.slots)
    if j < c.n:
        if slots[j - 1] == PLUS and slots[j] != PLUS:
            slots[j - 1], slots[j] = slots[j], slots[j - 1]
            return Clan(tuple(slots))
        return None
    if slots[-1] == PLUS:
        slots[-1] = c.number_count + 1
        return Clan(tuple(slots))
    return None


def prefix_plus_counts(c: Clan) -> tuple[int, ...]:
    """Running count of ``+`` slots; equals the a-vector of the matching w."""
    out = []
    count = 0
    for s in c.slots:
        if s == PLUS:
            count += 1
        out.append(count)
    return tuple(out)


def closure_leq(c1: Clan, c: Clan) -> bool:
    """Orbit closure order: the orbit of c1 lies in the closure of c's orbit."""
    if c1.n != c.n:
        raise ValueError("clan size mismatch")
    return all(a >= b for a, b in zip(prefix_plus_counts(c1), prefix_plus_counts(c)))


TOpResult = Union[Clan, frozenset]


def t_op(c: Clan, j: int, k: int) -> Optional[TOpResult]:
    """Wall-crossing operator for the adjacent simple pair (alpha_j, alpha_k).

    Defined iff alpha_j is not in tau(c) and alpha_k is.  For j, k < n the
    roots have equal length and the result is a single clan; when the long
    root alpha_n is involved the result is a frozenset of one or two clans.
    Returns None when the domain condition fails.
    """
    if abs(j - k) != 1 or not (1 <= j <= c.n and 1 <= k <= c.n):
        raise ValueError(f"({j},{k}) is not an adjacent simple pair in rank {c.n}")
    t = tau_clan(c)
    if j in t or k not in t:
        return None
    n = c.n
    slots = list(c.slots)

    if j < n and k < n:
        lo = min(j, k)  # patterns live in slots lo, lo+1, lo+2
        a, b, d = slots[lo - 1], slots[lo], slots[lo + 1]
        if k == j + 1:
            if (a, d) == (PLUS, PLUS) and b != PLUS:
                # (+, m, +) -> (+, +, m)
                slots[lo], slots[lo + 1] = d, b
            elif a == PLUS and b != PLUS and d == b + 1:
                # (+, m, m+1) -> (m, +, m+1)
                slots[lo - 1], slots[lo] = b, a
            else:  # pragma: no cover - unreachable on canonical clans
                raise AssertionError(f"no rewrite rule for {c} at T_{j},{k}")
        else:
            if a == PLUS and b == PLUS and d != PLUS:
                # (+, +, m) -> (+, m, +)
                slots[lo], slots[lo + 1] = d, b
            elif a != PLUS and b == PLUS and d == a + 1:
                # (m, +, m+1) -> (+, m, m+1)
                slots[lo - 1], slots[lo] = b, a
            else:  # pragma: no cover
                raise AssertionError(f"no rewrite rule for {c} at T_{j},{k}")
        return Clan(tuple(slots))

    if j == n:
        # domain gives slot n = '+' and slot n-1 in a tau pattern
        if slots[n - 2] == PLUS:
            # (..., +, +) -> (..., +, new largest number)
            slots[n - 1] = c.number_count + 1
        else:
            # (..., m, +) -> (..., +, m); m is the largest number
            slots[n - 2], slots[n - 1] = slots[n - 1], slots[n - 2]
        return frozenset({Clan(tuple(slots))})

    # j = n-1, k = n: slot n is the largest number m, slot n-1 is '+'
    m = slots[n - 1]
    swapped = list(slots)
    swapped[n - 2], swapped[n - 1] = m, PLUS
    deleted = list(slots)
    deleted[n - 1] = PLUS  # deleting the largest number keeps labels canonical
    return frozenset({Clan(tuple(swapped)), Clan(tuple(deleted))})


# -- head/tail induction ------------------------------------------------------


def decompose(c: Clan) -> tuple[int, Clan]:
    """Split off slot 1 and re-canonicalize the remaining slots.

    The head is PLUS or 1 (canonical labeling forces the first number to
    be 1).  When the head is 1 every tail number drops by one.
    """
    if c.n == 0:
        raise ValueError("cannot decompose the empty clan")
    head = c.slots[0]
    if head == PLUS:
        return PLUS, Clan(c.slots[1:])
    return 1, Clan(tuple(s - 1 if s != PLUS else PLUS for s in c.slots[1:]))


def compose(head: int, tail: Clan) -> Clan:
    """Inverse of :func:`decompose`."""
    if head == PLUS:
        return Clan((PLUS,) + tail.slots)
    if head != 1:
        raise ValueError(f"head must be + or 1, got {head}")
    return Clan((1,) + tuple(s + 1 if s != PLUS else PLUS for s in tail.slots))


def embed_w(w_tail: SignedPermutation) -> SignedPermutation:
    """Embed a rank n-1 element as a rank n element fixing 1."""
    return SignedPermutation(
        (1,) + tuple(e + 1 if e > 0 else e - 1 for e in w_tail.entries)
    )


def lift_w(head: int, w_embedded: SignedPermutation) -> SignedPermutation:
    """Lift an embedded rank n-1 element to the element of the composed clan.

    Head 1 multiplies by the reflection in 2e_1 (negate the first entry);
    head ``+`` multiplies by the cycle sigma = s_{n-1}...s_2 s_1, sending
    the fixed e_1 to e_n and shifting everything else down by one.
    """
    if w_embedded.entries[0] != 1:
        raise ValueError("embedded element must fix 1")
    if head != PLUS and head != 1:
        raise ValueError(f"head must be + or 1, got {head}")
    rest = w_embedded.entries[1:]
    if head == 1:
        return SignedPermutation((-1,) + rest)
    n = w_embedded.n
    shifted = tuple(e - 1 if e > 0 else e + 1 for e in rest)
    return SignedPermutation((n,) + shifted)
