"""Clan calculus for the highest weight Harish-Chandra modules of Sp(2n,R).

The package computes, for every support clan, the full invariant record:
Weyl group element, orbit dimension, tau-invariant, geometric and
Harish-Chandra cell indices, associated variety, characteristic cycle and
leading term cycle.  Everything is exact integer combinatorics; randomized
finite-field rank checks and brute-force order oracles double-check the
closed-form recursions.
"""

SCHEMA_VERSION = 1

from .clans import Clan, ClanParseError, parse_clan
from .cycles import CharacteristicCycle, annihilator_partner, av, cc, ltc
from .tables import TableRow, enumerate_rows, table_row
from .weyl import SignedPermutation

__all__ = [
    "SCHEMA_VERSION",
    "Clan",
    "ClanParseError",
    "CharacteristicCycle",
    "SignedPermutation",
    "annihilator_partner",
    "av",
    "cc",
    "ltc",
    "parse_clan",
    "table_row",
    "enumerate_rows",
    "TableRow",
]
