"""Characteristic cycles, leading term cycles and annihilator partners.

The characteristic cycle of the module supported on a clan is assembled
from the cycle of its tail clan one rank down.  There are three cases:

* head ``+``: every tail term is prefixed with ``+``;
* head ``1``, generic: every tail term is prefixed with ``1``;
* head ``1`` inside the top cell at even rank (the tail has maximal
  geometric index n-1): both prefixes appear, and the ``+``-prefixed half
  is exactly the leading term cycle.

All multiplicities come out equal to one; this is asserted on every build
rather than hard-coded, so a violation fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cells import hc_cell_index
from .clans import PLUS, Clan, compose, decompose
from .geometry import rank_recursive


@dataclass(frozen=True)
class CharacteristicCycle:
    """Formal sum of conormal terms; every clan maps to its multiplicity."""

    support: Clan
    terms: tuple[tuple[Clan, int], ...]

    def multiplicity(self, c: Clan) -> int:
        for clan, mult in self.terms:
            if clan == c:
                return mult
        return 0

    def clans(self) -> frozenset[Clan]:
        return frozenset(clan for clan, _ in self.terms)

    def __contains__(self, c: Clan) -> bool:
        return self.multiplicity(c) > 0

    def __len__(self) -> int:
        return len(self.terms)


def is_even_top_cell(c: Clan) -> bool:
    """Whether c is a head-1 clan of the top cell at even rank (case 3)."""
    if c.n < 2 or c.n % 2 or c.slots[0] == PLUS:
        return False
    _, tail = decompose(c)
    return rank_recursive(tail) == c.n - 1


@lru_cache(maxsize=None)
def _cc_clans(slots: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    c = Clan(slots)
    if c.n <= 1:
        return (slots,)
    head, tail = decompose(c)
    tail_terms = [Clan(t) for t in _cc_clans(tail.slots)]
    if head == PLUS:
        out = [compose(PLUS, t) for t in tail_terms]
    elif is_even_top_cell(c):
        out = [compose(1, t) for t in tail_terms]
        out += [compose(PLUS, t) for t in tail_terms]
    else:
        out = [compose(1, t) for t in tail_terms]
    result = tuple(sorted(t.slots for t in out))
    # multiplicity-one assertion: composing distinct clans with a fixed head
    # stays injective, so any collision signals a broken recursion
    if len(set(result)) != len(result):
        raise AssertionError(f"multiplicity above one in the cycle of {c}")
    return result


def cc(c: Clan) -> CharacteristicCycle:
    """Characteristic cycle of the module supported on c."""
    if c.n == 0:
        raise ValueError("the empty clan supports no module")
    terms = tuple((Clan(s), 1) for s in _cc_clans(c.slots))
    cycle = CharacteristicCycle(support=c, terms=terms)
    if c not in cycle:
        raise AssertionError(f"support term missing from the cycle of {c}")
    return cycle


def ltc(c: Clan) -> CharacteristicCycle:
    """Leading term cycle: the terms whose moment-map image index is maximal.

    That index equals the cell index of the support, and the filtered sum
    is never empty.
    """
    k = hc_cell_index(c)
    full = cc(c)
    terms = tuple(
        (clan, mult) for clan, mult in full.terms if rank_recursive(clan) == k
    )
    if not terms:
        raise AssertionError(f"leading term cycle of {c} came out empty")
    return CharacteristicCycle(support=c, terms=terms)


def av(c: Clan) -> int:
    """Orbit index of the associated variety; constant on the cell."""
    return hc_cell_index(c)


def annihilator_partner(c: Clan) -> Clan | None:
    """Head-+ clan with the same annihilator, for even-rank top-cell clans."""
    if not is_even_top_cell(c):
        return None
    _, tail = decompose(c)
    return compose(PLUS, tail)


def clear_cycle_cache() -> None:
    """Drop the memoized recursion table (mainly for memory-sensitive runs)."""
    _cc_clans.cache_clear()
