"""Command-line client for the blockalg service.

The CLI is a thin HTTP client.  By default it talks to the bundled
FastAPI app through an in-process transport (no server needed); pass
--server URL to address a running instance instead.

Exit codes: 0 on success (and all relations passing), 1 when any
relation suite reports a failure, 2 on usage or input errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # starlette 1.x warns that its test client prefers httpx2; the
        # httpx-backed client works fine as the in-process transport.
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _post(ctx: click.Context, path: str, payload: dict) -> dict:
    return _request(ctx, "POST", path, json=payload)


def _request(ctx: click.Context, method: str, path: str, **kwargs) -> dict:
    client = _client(ctx.obj.get("server"))
    try:
        resp = client.request(method, path, **kwargs)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach server: {exc}", err=True)
        sys.exit(2)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        if isinstance(detail, list):
            detail = "; ".join(str(d.get("msg", d)) for d in detail)
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)
    return resp.json()


@click.group()
@click.option("--server", default=None, metavar="URL", help="Remote service URL (default: in-process).")
@click.version_option()
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Block decompositions, generator polynomials, and relation checks."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.argument("word")
@click.pass_context
def decompose(ctx: click.Context, word: str) -> None:
    """Block decomposition, bl tuple, and degrees of WORD."""
    data = _post(ctx, "/decompose", {"word": word})
    click.echo(f"{data['tuple_repr']}, block degree {data['block_degree']}")
    click.echo(f"blocks: {' | '.join(data['blocks'])}")
    click.echo(
        f"weight {data['weight']}, depth {data['depth']}, "
        f"framed block degree {data['framed_block_degree']}"
    )


@main.command()
@click.argument("value")
@click.option("--invert", is_flag=True, help="Treat VALUE as a monomial and recover the word.")
@click.pass_context
def pibl(ctx: click.Context, value: str, invert: bool) -> None:
    """Monomial encoding of WORD, or its inverse with --invert."""
    if invert:
        data = _post(ctx, "/pibl/invert", {"monomial": value})
        click.echo(data["word"])
    else:
        data = _post(ctx, "/pibl", {"word": value})
        click.echo(data["monomial"])


@main.command()
@click.argument("weight", type=int)
@click.option("--reduced", is_flag=True, help="Divide out x1 x2 (x1 - x2).")
@click.option("--as-q", is_flag=True, help="Return the one-sided component instead.")
@click.pass_context
def generator(ctx: click.Context, weight: int, reduced: bool, as_q: bool) -> None:
    """Canonical generator polynomial of odd WEIGHT."""
    data = _post(ctx, "/generator", {"weight": weight, "reduced": reduced, "as_q": as_q})
    click.echo(data["rendered"])


@main.command()
@click.argument("weights", type=int, nargs=-1, required=True)
@click.option("--reduced", is_flag=True, help="Return the reduced block polynomial.")
@click.pass_context
def bracket(ctx: click.Context, weights: tuple[int, ...], reduced: bool) -> None:
    """Left-nested bracket of generators with the given odd WEIGHTS."""
    data = _post(ctx, "/bracket", {"weights": list(weights), "reduced": reduced})
    click.echo(data["rendered"])


@main.command()
@click.argument("word")
@click.option("--r", "r", type=int, required=True, help="Half-width: extracts weight-(2r+1) left factors.")
@click.pass_context
def coaction(ctx: click.Context, word: str, r: int) -> None:
    """Surviving infinitesimal coaction terms of I(0;WORD;1)."""
    data = _post(ctx, "/coaction", {"word": word, "r": r})
    if not data["terms"]:
        click.echo("0")
        return
    for t in data["terms"]:
        prefix = "" if t["coeff"] == "1" else f"{t['coeff']}*"
        click.echo(f"{prefix}{t['left']} (x) {t['right']}")


@main.command()
@click.option("--max-weight", type=int, default=13, show_default=True)
@click.option("--max-block-degree", type=int, default=3, show_default=True)
@click.pass_context
def dims(ctx: click.Context, max_weight: int, max_block_degree: int) -> None:
    """Free Lie algebra dimensions and Hoffman level counts."""
    data = _request(
        ctx,
        "GET",
        f"/dims?max_weight={max_weight}&max_block_degree={max_block_degree}",
    )
    click.echo("weight  block_degree  dimension")
    for cell in data["lyndon"]:
        click.echo(f"{cell['weight']:6d}  {cell['block_degree']:12d}  {cell['dimension']:9d}")
    click.echo("")
    click.echo("weight  level  hoffman_count")
    for cell in data["hoffman"]:
        click.echo(f"{cell['weight']:6d}  {cell['level']:5d}  {cell['count']:13d}")


def _emit_verify(data: dict, fmt: str) -> int:
    if fmt == "structured":
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    else:
        for rep in data["reports"]:
            p = rep["parameters"]
            click.echo(
                f"{rep['relation_name']:28s} {rep['status']:4s} "
                f"instances={rep['instances_checked']} "
                f"(max_weight={p.get('max_weight')}, max_block_degree={p.get('max_block_degree')})"
            )
            for failure in rep["failures"]:
                click.echo(f"    counterexample: {failure['input']}")
        click.echo("all pass" if data["all_pass"] else "FAILURES PRESENT")
    return 0 if data["all_pass"] else 1


@main.command()
@click.option("--suite", "suites", multiple=True, help="Suite name (repeatable; default all).")
@click.option("--max-weight", type=int, default=None)
@click.option("--max-block-degree", type=int, default=None)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "structured"]),
    default="text",
    show_default=True,
)
@click.pass_context
def verify(
    ctx: click.Context,
    suites: tuple[str, ...],
    max_weight: int | None,
    max_block_degree: int | None,
    fmt: str,
) -> None:
    """Run relation suites; exit 0 only if every instance passes."""
    payload: dict = {"max_weight": max_weight, "max_block_degree": max_block_degree}
    if suites:
        payload["suites"] = list(suites)
    data = _post(ctx, "/verify", payload)
    sys.exit(_emit_verify(data, fmt))


def _parse_config(path: Path) -> dict:
    payload: dict = {}
    fmt = "text"
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise click.UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in ("max_weight", "max_block_degree"):
            payload[key] = int(value)
        elif key == "suites":
            payload["suites"] = [s.strip() for s in value.split(",") if s.strip()]
        elif key == "output_format":
            fmt = value
        else:
            raise click.UsageError(f"{path}:{lineno}: unknown config key {key!r}")
    payload["_format"] = fmt
    return payload


@main.command()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
)
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default=None)
@click.pass_context
def report(ctx: click.Context, config_path: Path, fmt: str | None) -> None:
    """Run the full suite from a flat key = value config file."""
    payload = _parse_config(config_path)
    file_fmt = payload.pop("_format")
    data = _post(ctx, "/verify", payload)
    sys.exit(_emit_verify(data, fmt or file_fmt))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service with uvicorn."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
