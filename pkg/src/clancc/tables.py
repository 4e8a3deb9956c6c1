"""Full invariant records per clan and the deterministic table ordering."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .cells import hc_cell_index
from .clans import PLUS, Clan, all_clans, dim, tau_clan, w_from_clan
from .cycles import annihilator_partner, av, cc, ltc
from .geometry import rank_recursive

MAX_ENUMERATE_N = 20


def clan_sort_key(c: Clan) -> tuple:
    """Lexicographic slot order with '+' before any number."""
    return tuple((0, 0) if s == PLUS else (1, s) for s in c.slots)


def term_sort_key(c: Clan) -> tuple:
    """Cycle display order: dimension descending puts the support first."""
    return (-dim(c), clan_sort_key(c))


@dataclass(frozen=True)
class TableRow:
    """One line of the invariant table."""

    clan: Clan
    w: str
    dim: int
    tau: tuple[int, ...]
    hc_cell: int
    g_cell: int
    av: int
    cc: tuple[Clan, ...]
    ltc: tuple[Clan, ...]
    annihilator_partner: Clan | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "clan": self.clan.to_text(),
            "w": self.w,
            "dim": self.dim,
            "tau": list(self.tau),
            "hc_cell": self.hc_cell,
            "g_cell": self.g_cell,
            "av": self.av,
            "cc": [t.to_text() for t in self.cc],
            "ltc": [t.to_text() for t in self.ltc],
            "annihilator_partner": (
                self.annihilator_partner.to_text() if self.annihilator_partner else None
            ),
        }


def table_row(c: Clan) -> TableRow:
    """Compute the full record for a single clan."""
    cycle = cc(c)
    leading = ltc(c)
    partner = annihilator_partner(c)
    return TableRow(
        clan=c,
        w=w_from_clan(c).to_text(),
        dim=dim(c),
        tau=tuple(sorted(tau_clan(c))),
        hc_cell=hc_cell_index(c),
        g_cell=rank_recursive(c),
        av=av(c),
        cc=tuple(sorted(cycle.clans(), key=term_sort_key)),
        ltc=tuple(sorted(leading.clans(), key=term_sort_key)),
        annihilator_partner=partner,
    )


def enumerate_rows(n: int) -> list[TableRow]:
    """All 2^n rows, ordered by (cell descending, dim ascending, clan)."""
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise ValueError(
            f"full enumeration is limited to 1 <= n <= {MAX_ENUMERATE_N}; "
            "use the single-clan command for larger ranks"
        )
    rows = [table_row(c) for c in all_clans(n)]
    rows.sort(key=lambda r: (-r.hc_cell, r.dim, clan_sort_key(r.clan)))
    return rows
