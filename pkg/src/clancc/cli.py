"""Command line client for the clan calculus service.

Every subcommand speaks the service's HTTP API.  Without ``--server`` the
requests are dispatched to the bundled app in process, so the CLI works
standalone; with ``--server URL`` they go to a running instance instead.
JSON is the schema of record; csv and markdown are renderings of the same
content.

Exit codes: 0 success, 1 verification failure (or transport error),
2 usage or parse error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Any

import click
import httpx

ROW_FIELDS = [
    "clan", "w", "dim", "tau", "hc_cell", "g_cell", "av", "cc", "ltc",
    "annihilator_partner",
]
CELL_FIELDS = ["k", "size", "rep_dim", "springer_dim", "clans"]


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=httpx.Timeout(600.0))
    import warnings

    with warnings.catch_warnings():
        # starlette warns about its httpx-based test transport; it is the
        # supported way to drive the app in process, so keep stderr clean
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def request(client: httpx.Client, method: str, path: str, **kwargs: Any) -> dict:
    try:
        response = client.request(method, path, **kwargs)
    except httpx.HTTPError as exc:
        raise click.ClickException(f"transport error: {exc}")
    if response.status_code == 400:
        raise click.UsageError(response.json().get("detail", response.text))
    if response.status_code == 422:
        raise click.UsageError(f"invalid request: {response.text}")
    if response.status_code != 200:
        raise click.ClickException(f"HTTP {response.status_code}: {response.text}")
    return response.json()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


def _cell_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def _to_csv(records: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(fields)
    for record in records:
        writer.writerow([_cell_value(record.get(f)) for f in fields])
    return buf.getvalue()


def _to_markdown(records: list[dict], fields: list[str]) -> str:
    lines = ["| " + " | ".join(fields) + " |", "|" + "---|" * len(fields)]
    for record in records:
        lines.append(
            "| " + " | ".join(_cell_value(record.get(f)) for f in fields) + " |"
        )
    return "\n".join(lines) + "\n"


def render(payload: dict, records: list[dict], fields: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return _to_csv(records, fields)
    return _to_markdown(records, fields)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv", "md"]), default="md",
    show_default=True, help="output rendering; json carries the full response",
)
server_option = click.option(
    "--server", default=None, metavar="URL",
    help="base URL of a running service; default is in-process",
)
out_option = click.option(
    "--out", default=None, type=click.Path(dir_okay=False, writable=True),
    help="write the output to a file instead of stdout",
)


@click.group()
def main() -> None:
    """Clan calculus for highest weight Harish-Chandra modules of Sp(2n,R)."""


@main.command(name="enumerate")
@click.option("--n", type=int, required=True, help="rank; full table has 2^n rows")
@format_option
@out_option
@server_option
def enumerate_table(n: int, fmt: str, out: str | None, server: str | None) -> None:
    """Tabulate every clan of rank n with its full invariant record."""
    with make_client(server) as client:
        payload = request(client, "GET", "/enumerate", params={"n": n})
    _emit(render(payload, payload["rows"], ROW_FIELDS, fmt), out)


@main.command(short_help="Full invariant record of a single clan.")
@click.argument("clan_text", metavar="CLAN")
@format_option
@out_option
@server_option
def clan(clan_text: str, fmt: str, out: str | None, server: str | None) -> None:
    """Full invariant record of a single clan, e.g. '1+2+' or '1,+,2,+'."""
    with make_client(server) as client:
        payload = request(client, "POST", "/clan", json={"clan": clan_text})
    _emit(render(payload, [payload["row"]], ROW_FIELDS, fmt), out)


@main.command()
@click.option("--n", type=int, required=True, help="rank")
@format_option
@out_option
@server_option
def cells(n: int, fmt: str, out: str | None, server: str | None) -> None:
    """List the Harish-Chandra cells of rank n with sizes and members."""
    with make_client(server) as client:
        payload = request(client, "GET", "/cells", params={"n": n})
    _emit(render(payload, payload["cells"], CELL_FIELDS, fmt), out)


@main.command()
@click.option("--nmax", type=int, default=None, help="largest rank to sweep (<= 10)")
@click.option("--trials", type=int, default=None, help="rank oracle trials per clan")
@click.option("--seed", type=int, default=None, help="rank oracle seed")
@click.option("--prime", type=int, default=None, help="rank oracle field size")
@click.option(
    "--config", "config_path", default=None, type=click.Path(exists=True, dir_okay=False),
    help="JSON file with default oracle parameters; flags override it",
)
@out_option
@server_option
@click.option(
    "--format", "fmt", type=click.Choice(["json", "text"]), default="text",
    show_default=True, help="stdout rendering of the report",
)
def verify(
    nmax: int | None,
    trials: int | None,
    seed: int | None,
    prime: int | None,
    config_path: str | None,
    out: str | None,
    server: str | None,
    fmt: str,
) -> None:
    """Run the brute-force verification suite; exit 1 on any failed check."""
    body: dict[str, Any] = {}
    if config_path:
        try:
            with open(config_path) as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise click.UsageError(f"cannot read config {config_path}: {exc}")
        for key in ("n_max", "trials", "seed", "prime"):
            if key in config:
                body[key] = config[key]
    for key, value in (
        ("n_max", nmax), ("trials", trials), ("seed", seed), ("prime", prime),
    ):
        if value is not None:
            body[key] = value
    with make_client(server) as client:
        payload = request(client, "POST", "/verify", json=body)
    if out:
        with open(out, "w") as fh:
            json.dump(payload, fh, indent=2)
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        for check in payload["checks"]:
            status = "PASS" if check["passed"] else "FAIL"
            detail = f"  ({check['detail']})" if check.get("detail") else ""
            click.echo(f"{status}  {check['name']}{detail}")
            if not check["passed"] and check.get("counterexample") is not None:
                click.echo(f"      counterexample: {check['counterexample']}")
        verdict = "all checks passed" if payload["passed"] else "FAILURES PRESENT"
        click.echo(f"{len(payload['checks'])} checks: {verdict}")
    if not payload["passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("clancc.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
