"""HTTP facade over the clan calculus.

All computation is stateless and exact, so the service is a thin layer of
pydantic models over the library; JSON responses are the schema of record
for every output format the CLI renders.
"""

from __future__ import annotations

from typing import Any, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import SCHEMA_VERSION
from .cells import cell_rep_dim, hc_cell_members, legal_cell_indices, springer_dim
from .clans import ClanParseError, parse_clan
from .geometry import DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS
from .tables import MAX_ENUMERATE_N, clan_sort_key, enumerate_rows, table_row
from .verify import CC_N_CAP, run_full_verification

app = FastAPI(
    title="clancc",
    description=(
        "Support clans, cells, characteristic cycles and leading term cycles "
        "for the highest weight Harish-Chandra modules of Sp(2n,R)."
    ),
    version="0.1.0",
)


class HealthResponse(BaseModel):
    status: str
    schema_version: int


class TableRowModel(BaseModel):
    clan: str
    w: str
    dim: int
    tau: list[int]
    hc_cell: int
    g_cell: int
    av: int
    cc: list[str]
    ltc: list[str]
    annihilator_partner: Optional[str] = None


class EnumerateResponse(BaseModel):
    schema_version: int
    n: int
    rows: list[TableRowModel]


class ClanRequest(BaseModel):
    clan: str = Field(description="compact ('1+2+') or comma-token ('1,+,2,+') text")


class ClanResponse(BaseModel):
    schema_version: int
    row: TableRowModel


class CellModel(BaseModel):
    k: int
    size: int
    rep_dim: int
    springer_dim: int
    clans: list[str]


class CellsResponse(BaseModel):
    schema_version: int
    n: int
    cells: list[CellModel]


class VerifyRequest(BaseModel):
    n_max: int = Field(default=7, ge=1, le=CC_N_CAP)
    trials: int = Field(default=DEFAULT_TRIALS, ge=1)
    seed: int = DEFAULT_SEED
    prime: Optional[int] = None


class CheckModel(BaseModel):
    name: str
    params: dict[str, Any]
    passed: bool
    detail: str = ""
    elapsed: float = 0.0
    counterexample: Any = None


class VerifyResponse(BaseModel):
    schema_version: int
    passed: bool
    config: dict[str, Any]
    checks: list[CheckModel]


@app.get("/healthz", response_model=HealthResponse)
def healthz() -> HealthResponse:
    return HealthResponse(status="ok", schema_version=SCHEMA_VERSION)


@app.get("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(n: int) -> EnumerateResponse:
    try:
        rows = enumerate_rows(n)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return EnumerateResponse(
        schema_version=SCHEMA_VERSION,
        n=n,
        rows=[TableRowModel(**r.to_dict()) for r in rows],
    )


@app.post("/clan", response_model=ClanResponse)
def clan_endpoint(request: ClanRequest) -> ClanResponse:
    try:
        c = parse_clan(request.clan)
        if c.n == 0:
            raise ClanParseError("clan text is empty")
    except ClanParseError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    row = table_row(c)
    return ClanResponse(schema_version=SCHEMA_VERSION, row=TableRowModel(**row.to_dict()))


@app.get("/cells", response_model=CellsResponse)
def cells_endpoint(n: int) -> CellsResponse:
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise HTTPException(
            status_code=400,
            detail=f"cell listing is limited to 1 <= n <= {MAX_ENUMERATE_N}",
        )
    cells = []
    for k in legal_cell_indices(n):
        members = sorted(hc_cell_members(n, k), key=clan_sort_key)
        cells.append(
            CellModel(
                k=k,
                size=len(members),
                rep_dim=cell_rep_dim(n, k),
                springer_dim=springer_dim(n, k),
                clans=[c.to_text() for c in members],
            )
        )
    cells.sort(key=lambda cell: -cell.k)
    return CellsResponse(schema_version=SCHEMA_VERSION, n=n, cells=cells)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
    report = run_full_verification(
        n_max=request.n_max,
        trials=request.trials,
        seed=request.seed,
        prime=request.prime if request.prime is not None else DEFAULT_PRIME,
    )
    payload = report.to_dict()
    return VerifyResponse(
        schema_version=SCHEMA_VERSION,
        passed=payload["passed"],
        config=payload["config"],
        checks=[CheckModel(**c) for c in payload["checks"]],
    )
