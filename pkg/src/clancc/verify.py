"""Independent brute-force verification of every closed-form computation.

Each check recomputes an invariant by a route independent of the library
code it validates (transitive closure of the raising-operation graph,
randomized finite-field ranks, frozen golden tables) and reports pass or
fail with a reproducible counterexample.  Results are assembled into a
machine-readable report; everything except elapsed times is deterministic
given (n, prime, trials, seed).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from math import comb
from typing import Any, Callable

from . import SCHEMA_VERSION
from .cells import cell_rep_dim, hc_cell_index, legal_cell_indices
from .clans import (
    PLUS,
    Clan,
    all_clans,
    closure_leq,
    compose,
    decompose,
    dim,
    parse_clan,
    s_op,
    t_op,
    tau_clan,
    w_from_clan,
)
from .cycles import cc, is_even_top_cell, ltc
from .geometry import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    geometric_cell_size,
    rank_oracle,
    rank_recursive,
)
from .tables import enumerate_rows, term_sort_key
from .weyl import (
    bruhat_leq_avector,
    bruhat_leq_bmatrix,
    bruhat_leq_longform,
)

PAIRWISE_N_CAP = 7
CC_N_CAP = 10
MCGOVERN_N_CAP = 7
GOLDEN_RANKS = (2, 3, 4)


@dataclass
class Check:
    name: str
    params: dict[str, Any]
    passed: bool
    detail: str = ""
    counterexample: Any = None
    elapsed: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 6),
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerificationReport:
    config: dict[str, Any]
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config,
            "passed": self.passed,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def summary_lines(self) -> list[str]:
        lines = []
        for c in sorted(self.checks, key=lambda c: c.name):
            status = "PASS" if c.passed else "FAIL"
            detail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"{status}  {c.name}{detail}")
            if not c.passed and c.counterexample is not None:
                lines.append(f"      counterexample: {c.counterexample}")
        verdict = "all checks passed" if self.passed else "FAILURES PRESENT"
        lines.append(f"{len(self.checks)} checks: {verdict}")
        return lines


def _run(name: str, params: dict[str, Any], fn: Callable[[], tuple[bool, str, Any]]) -> Check:
    start = time.perf_counter()
    passed, detail, counterexample = fn()
    return Check(
        name=name,
        params=params,
        passed=passed,
        detail=detail,
        counterexample=counterexample,
        elapsed=time.perf_counter() - start,
    )


# -- Bruhat order -------------------------------------------------------------


def verify_bruhat(n: int) -> list[Check]:
    """Pairwise agreement of the three order tests, and the raising-graph oracle."""
    if n > PAIRWISE_N_CAP:
        raise ValueError(f"pairwise order checks are limited to n <= {PAIRWISE_N_CAP}")
    checks = [
        _run(f"bruhat.orders-pairwise.n{n}", {"n": n}, lambda: _orders_pairwise(n)),
        _run(f"bruhat.dag-reachability.n{n}", {"n": n}, lambda: _dag_vs_avector(n)),
    ]
    return checks


def _orders_pairwise(n: int) -> tuple[bool, str, Any]:
    elements = [w_from_clan(c) for c in all_clans(n)]
    count = 0
    for y in elements:
        for w in elements:
            results = (
                bruhat_leq_longform(y, w),
                bruhat_leq_bmatrix(y, w),
                bruhat_leq_avector(y, w),
            )
            count += 1
            if len(set(results)) != 1:
                return False, f"{count} pairs", {
                    "y": y.to_text(),
                    "w": w.to_text(),
                    "longform": results[0],
                    "bmatrix": results[1],
                    "avector": results[2],
                }
    return True, f"{count} pairs", None


def _dag_vs_avector(n: int) -> tuple[bool, str, Any]:
    """Reachability by raising operations must equal the a-vector order."""
    clans = list(all_clans(n))
    index = {c: i for i, c in enumerate(clans)}
    by_dim_desc = sorted(clans, key=dim, reverse=True)
    reach = [0] * len(clans)
    for c in by_dim_desc:
        mask = 1 << index[c]
        for j in range(1, n + 1):
            up = s_op(c, j)
            if up is not None:
                mask |= reach[index[up]]
        reach[index[c]] = mask
    count = 0
    for c1 in clans:
        for c in clans:
            reachable = bool(reach[index[c1]] >> index[c] & 1)
            count += 1
            if reachable != closure_leq(c1, c):
                return False, f"{count} pairs", {
                    "c1": c1.to_text(),
                    "c": c.to_text(),
                    "reachable": reachable,
                    "closure_leq": closure_leq(c1, c),
                }
    return True, f"{count} pairs", None


# -- moment-map ranks ---------------------------------------------------------


def verify_ranks(
    n: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int = DEFAULT_PRIME,
) -> list[Check]:
    """Randomized generic-rank oracle against the closed recursion."""
    if n > PAIRWISE_N_CAP:
        raise ValueError(f"rank oracle checks are limited to n <= {PAIRWISE_N_CAP}")
    params = {"n": n, "trials": trials, "seed": seed, "prime": prime}

    def body() -> tuple[bool, str, Any]:
        for c in all_clans(n):
            expected = rank_recursive(c)
            measured = rank_oracle(c, trials=trials, seed=seed, prime=prime)
            if expected != measured:
                return False, f"{2 ** n} clans", {
                    "clan": c.to_text(),
                    "recursive": expected,
                    "oracle": measured,
                }
        return True, f"{2 ** n} clans", None

    return [_run(f"ranks.oracle-agree.n{n}", params, body)]


# -- counting identities ------------------------------------------------------


def verify_counts(n: int) -> list[Check]:
    """Cell cardinalities against their binomial closed forms."""

    def geometric() -> tuple[bool, str, Any]:
        sizes = [0] * (n + 1)
        for c in all_clans(n):
            sizes[rank_recursive(c)] += 1
        for k, size in enumerate(sizes):
            if size != geometric_cell_size(n, k):
                return False, "", {"k": k, "size": size,
                                   "expected": geometric_cell_size(n, k)}
        if sum(sizes) != 2 ** n:
            return False, "", {"total": sum(sizes)}
        return True, f"{n + 1} cells", None

    def harish_chandra() -> tuple[bool, str, Any]:
        legal = legal_cell_indices(n)
        seen = {k: 0 for k in legal}
        for c in all_clans(n):
            k = hc_cell_index(c)
            if k not in seen:
                return False, "", {"clan": c.to_text(), "illegal_index": k}
            seen[k] += 1
        for k in legal:
            expected = comb(n + 1, k // 2) if k % 2 == 0 else comb(n, (n - 1) // 2)
            if seen[k] != expected or seen[k] != cell_rep_dim(n, k):
                return False, "", {"k": k, "size": seen[k], "expected": expected,
                                   "rep_dim": cell_rep_dim(n, k)}
        if sum(seen.values()) != 2 ** n:
            return False, "", {"total": sum(seen.values())}
        return True, f"{len(legal)} cells", None

    return [
        _run(f"counts.geometric-cells.n{n}", {"n": n}, geometric),
        _run(f"counts.hc-cells.n{n}", {"n": n}, harish_chandra),
    ]


# -- characteristic cycles ----------------------------------------------------


def verify_cc(n: int) -> list[Check]:
    """Every cycle invariant, plus the golden tables at ranks 2..4."""
    if n > CC_N_CAP:
        raise ValueError(f"cycle checks are limited to n <= {CC_N_CAP}")
    checks = [
        _run(f"cc.invariants.n{n}", {"n": n}, lambda: _cc_invariants(n)),
        _run(f"cc.narrowing.n{n}", {"n": n}, lambda: _cc_narrowing(n)),
        _run(f"cc.ltc.n{n}", {"n": n}, lambda: _cc_ltc(n)),
        _run(f"cc.smooth-singletons.n{n}", {"n": n}, lambda: _cc_smooth(n)),
    ]
    if n <= MCGOVERN_N_CAP:
        checks.append(
            _run(f"cc.t-propagation.n{n}", {"n": n}, lambda: _cc_mcgovern(n))
        )
    if n in GOLDEN_RANKS:
        checks.append(
            _run(f"golden.table.n{n}", {"n": n}, lambda: compare_golden(n))
        )
    return checks


def _cc_invariants(n: int) -> tuple[bool, str, Any]:
    """Multiplicity one, support presence, closure containment, tau inclusion."""
    for c in all_clans(n):
        cycle = cc(c)
        support_tau = tau_clan(c)
        for term, mult in cycle.terms:
            if mult != 1:
                return False, "", {"clan": c.to_text(), "term": term.to_text(),
                                   "multiplicity": mult}
            if not closure_leq(term, c):
                return False, "", {"clan": c.to_text(), "term": term.to_text(),
                                   "violated": "closure"}
            if not support_tau <= tau_clan(term):
                return False, "", {"clan": c.to_text(), "term": term.to_text(),
                                   "violated": "tau-inclusion"}
        if c not in cycle:
            return False, "", {"clan": c.to_text(), "violated": "support-term"}
    return True, f"{2 ** n} clans", None


def _cc_narrowing(n: int) -> tuple[bool, str, Any]:
    """Terms stay inside the geometric cells their cell membership allows."""
    for c in all_clans(n):
        r = rank_recursive(c)
        k = hc_cell_index(c)
        allowed = {k} if r == k else {k, k - 1}
        for term, _ in cc(c).terms:
            if rank_recursive(term) not in allowed:
                return False, "", {
                    "clan": c.to_text(),
                    "term": term.to_text(),
                    "term_cell": rank_recursive(term),
                    "allowed": sorted(allowed),
                }
    return True, f"{2 ** n} clans", None


def _cc_ltc(n: int) -> tuple[bool, str, Any]:
    """Leading term cycles: nonempty, equality criterion, top-cell shape."""
    for c in all_clans(n):
        leading = ltc(c)
        if len(leading) == 0:
            return False, "", {"clan": c.to_text(), "violated": "nonempty"}
        equals_cc = leading.clans() == cc(c).clans()
        should_equal = rank_recursive(c) == hc_cell_index(c)
        if equals_cc != should_equal:
            return False, "", {"clan": c.to_text(), "violated": "ltc-equality",
                               "equals_cc": equals_cc, "expected": should_equal}
        if is_even_top_cell(c):
            _, tail = decompose(c)
            expected_set = frozenset(
                compose(PLUS, t) for t in cc(tail).clans()
            )
            if leading.clans() != expected_set:
                return False, "", {"clan": c.to_text(), "violated": "top-cell-ltc"}
    return True, f"{2 ** n} clans", None


def _cc_smooth(n: int) -> tuple[bool, str, Any]:
    """Smooth supports (leading plusses then all numbers) give singleton cycles."""
    for plusses in range(n + 1):
        slots = tuple([PLUS] * plusses + list(range(1, n - plusses + 1)))
        c = Clan(slots)
        if len(cc(c)) != 1:
            return False, "", {"clan": c.to_text(), "terms": len(cc(c))}
    return True, f"{n + 1} clans", None


def _cc_mcgovern(n: int) -> tuple[bool, str, Any]:
    """Equal-length wall-crossing preserves term membership and multiplicity."""
    pairs = 0
    for c in all_clans(n):
        cycle = cc(c)
        for j, k in [(j, j + 1) for j in range(1, n - 1)] + [
            (j + 1, j) for j in range(1, n - 1)
        ]:
            tc = t_op(c, j, k)
            if tc is None:
                continue
            assert isinstance(tc, Clan)
            target = cc(tc)
            for term, mult in cycle.terms:
                t_term = t_op(term, j, k)
                if t_term is None:
                    continue
                assert isinstance(t_term, Clan)
                pairs += 1
                if target.multiplicity(t_term) != mult:
                    return False, f"{pairs} pairs", {
                        "clan": c.to_text(),
                        "term": term.to_text(),
                        "j": j,
                        "k": k,
                        "image_clan": tc.to_text(),
                        "image_term": t_term.to_text(),
                        "multiplicity": target.multiplicity(t_term),
                    }
    return True, f"{pairs} pairs", None


# -- golden tables ------------------------------------------------------------


def load_golden(n: int) -> dict[str, Any]:
    if n not in GOLDEN_RANKS:
        raise ValueError(f"no golden table for n={n}")
    name = f"sp{2 * n}.json"
    with resources.files("clancc.goldens").joinpath(name).open() as fh:
        return json.load(fh)


def compare_golden(n: int) -> tuple[bool, str, Any]:
    """Computed table content against the frozen transcription, zero tolerance."""
    golden = load_golden(n)
    expected: dict[str, dict[str, Any]] = {}
    for row in golden["rows"]:
        c = parse_clan(row["clan"])
        terms = sorted((parse_clan(t) for t in row["cc"]), key=term_sort_key)
        expected[c.to_text()] = {
            "dim": row["dim"],
            "tau": tuple(row["tau"]),
            "hc_cell": row["hc_cell"],
            "g_cell": row["g_cell"],
            "cc": tuple(t.to_text() for t in terms),
        }
    rows = enumerate_rows(n)
    if len(rows) != len(expected):
        return False, "", {"rows": len(rows), "expected": len(expected)}
    for row in rows:
        key = row.clan.to_text()
        want = expected.get(key)
        got = {
            "dim": row.dim,
            "tau": row.tau,
            "hc_cell": row.hc_cell,
            "g_cell": row.g_cell,
            "cc": tuple(t.to_text() for t in row.cc),
        }
        if want != got:
            return False, "", {"clan": key, "computed": got, "golden": want}
    return True, f"{len(rows)} rows", None


# -- full suite ---------------------------------------------------------------


def run_full_verification(
    n_max: int = PAIRWISE_N_CAP,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int = DEFAULT_PRIME,
) -> VerificationReport:
    """Run every check family up to its own exhaustive cap."""
    if not 1 <= n_max <= CC_N_CAP:
        raise ValueError(f"n_max must lie in 1..{CC_N_CAP}")
    report = VerificationReport(
        config={
            "n_max": n_max,
            "trials": trials,
            "seed": seed,
            "prime": prime,
            "schema_version": SCHEMA_VERSION,
        }
    )
    for n in range(1, n_max + 1):
        if n <= PAIRWISE_N_CAP:
            report.checks.extend(verify_bruhat(n))
            report.checks.extend(verify_ranks(n, trials=trials, seed=seed, prime=prime))
        report.checks.extend(verify_counts(n))
        report.checks.extend(verify_cc(n))
    names = [c.name for c in report.checks]
    if len(set(names)) != len(names):
        raise AssertionError("duplicate check names in report")
    return report
