"""Command-line interface.

The CLI is a thin client of the HTTP service: by default it talks to an
in-process instance of the FastAPI app over an ASGI transport, and with
``--server`` it talks to a remote instance instead. Exit codes: 0 success,
1 usage error, 2 infeasible / structure lost, 3 I/O or parse error.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click
import httpx
import numpy as np

from .errors import ParseError, PhbalError
from .fileio import (
    format_report,
    parse_system,
    write_report,
    write_system,
    write_trajectory,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service.app import create_app

    return TestClient(create_app(), raise_server_exceptions=False)


def _load_gamma(spec: Optional[str]):
    """Resolve a shaping-matrix flag: keep 'zero'/'appendix' keywords,
    otherwise read a whitespace-delimited matrix file."""
    if spec is None or spec in ("zero", "appendix"):
        return spec
    try:
        return np.loadtxt(spec, ndmin=2).tolist()
    except OSError as exc:
        raise click.ClickException(f"cannot read shaping matrix {spec!r}: {exc}")


def _load_weights(spec: Optional[str]):
    if spec is None or spec == "uniform":
        return None
    try:
        return np.loadtxt(spec).ravel().tolist()
    except OSError as exc:
        raise click.ClickException(f"cannot read weights {spec!r}: {exc}")


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
def cli():
    """Balanced truncation with certified error bounds for LTI and
    port-Hamiltonian systems."""


@cli.command()
@click.option("--example", type=click.Choice(["msd", "rlc"]), default=None,
              help="Use a built-in example network.")
@click.option("--system", "system_path", type=click.Path(), default=None,
              help="System file (kind lti|ph with matrix blocks).")
@click.option("--pipeline", type=click.Choice(["gen", "ext", "gen-ph", "ext-ph"]),
              required=True)
@click.option("--k", type=int, default=None, help="Retained order.")
@click.option("--pairs", type=int, default=None,
              help="Capacitor-inductor pairs to remove (two-block systems).")
@click.option("--delta", type=float, default=None,
              help="Energy-scaled Gramian parameter (both sides).")
@click.option("--delta-c", type=float, default=None,
              help="Energy-scaled controllability Gramian parameter.")
@click.option("--slack-o", type=float, default=None,
              help="Observability Lyapunov slack (multiple of I).")
@click.option("--slack-c", type=float, default=None,
              help="Controllability Lyapunov slack (multiple of I).")
@click.option("--alpha", type=float, default=None, help="Extended observability scale.")
@click.option("--beta", type=float, default=None, help="Extended controllability scale.")
@click.option("--gamma-o", default=None,
              help="Shaping matrix: file path, 'zero', or 'appendix' (built-in preset).")
@click.option("--gamma-c", default=None,
              help="Shaping matrix: file path, 'zero', or 'appendix' (built-in preset).")
@click.option("--weights", default=None, help="Diagonal-search weights: file or 'uniform'.")
@click.option("--tol", type=float, default=1e-6, help="H-infinity bisection tolerance.")
@click.option("--simulate", "simulate_spec", default=None,
              help="Signal spec (zero|step:t0,level|sine:amp,omega|chirp:...|file:path).")
@click.option("--horizon", type=float, default=1.0, help="Simulation horizon (s).")
@click.option("--dt", type=float, default=None, help="Simulation step (s).")
@click.option("--hinf", is_flag=True, help="Compute the true error-system H-infinity norm.")
@click.option("--out-system", type=click.Path(), default=None,
              help="Write the reduced system file here.")
@click.option("--out-report", type=click.Path(), default=None,
              help="Write the report here (printed to stdout regardless).")
@click.option("--out-trajectory", type=click.Path(), default=None,
              help="Write the simulated trajectory CSV here.")
@click.option("--server", default=None, help="Remote service URL (default: in-process).")
def reduce(example, system_path, pipeline, k, pairs, delta, delta_c, slack_o,
           slack_c, alpha, beta, gamma_o, gamma_c, weights, tol, simulate_spec,
           horizon, dt, hinf, out_system, out_report, out_trajectory, server):
    """Run a reduction pipeline and report the certified bound."""
    if (example is None) == (system_path is None):
        raise click.UsageError("provide exactly one of --example or --system")
    payload = {
        "pipeline": pipeline, "k": k, "pairs": pairs, "delta": delta,
        "delta_c": delta_c, "slack_o": slack_o, "slack_c": slack_c,
        "alpha": alpha, "beta": beta,
        "gamma_o": _load_gamma(gamma_o), "gamma_c": _load_gamma(gamma_c),
        "weights": _load_weights(weights), "hinf": hinf, "tol": tol,
    }
    if example is not None:
        payload["example"] = example
    else:
        try:
            sf = parse_system(system_path)
        except ParseError as exc:
            _fail(EXIT_IO, f"{system_path}:{exc.line}: {exc.reason}")
        except OSError as exc:
            _fail(EXIT_IO, str(exc))
        payload["system"] = {"kind": sf.kind,
                             "matrices": {n: m.tolist() for n, m in sf.matrices.items()}}
    if simulate_spec is not None:
        payload["simulate"] = {"signal": simulate_spec, "horizon": horizon, "dt": dt}
    with _client(server) as client:
        try:
            resp = client.post("/reduce", json=payload)
        except httpx.HTTPError as exc:
            _fail(EXIT_IO, f"service unreachable: {exc}")
    if resp.status_code != 200:
        try:
            body = resp.json()
        except json.JSONDecodeError:
            body = {"error": "HTTP", "message": resp.text}
        message = f"{body.get('error', 'error')}: {body.get('message', '')}"
        if resp.status_code == 422:
            _fail(EXIT_INFEASIBLE, message)
        elif resp.status_code == 400 and body.get("error") == "ParseError":
            _fail(EXIT_IO, message)
        elif resp.status_code in (400, 404):
            _fail(EXIT_USAGE, message)
        else:
            _fail(EXIT_IO, message)
    data = resp.json()
    fields = {
        "pipeline": data["pipeline"],
        "k": data["k"],
        "bound": data["bound"],
    }
    for name, value in sorted(data["margins"].items()):
        fields[f"margin.{name}"] = value
    for name, value in sorted(data["flags"].items()):
        fields[f"flag.{name}"] = str(value).lower()
    if data.get("alpha") is not None:
        fields["alpha"] = data["alpha"]
    if data.get("beta") is not None:
        fields["beta"] = data["beta"]
    if data.get("hinf") is not None:
        fields["hinf"] = data["hinf"]
    if data.get("circuit"):
        for name, values in sorted(data["circuit"].items()):
            fields[f"circuit.{name}"] = " ".join(format(v, ".6g") for v in values)
    fields["timing_s"] = format(data["timing_s"], ".3f")
    lam = np.asarray(data["lam"], dtype=float)
    report_text = format_report(fields, lam)
    click.echo(report_text, nl=False)
    if out_report:
        write_report(out_report, fields, lam)
    if out_system:
        from .service.schemas import SystemPayload

        reduced = SystemPayload(**data["reduced"]).to_system()
        write_system(out_system, reduced, label=f"reduced by pipeline {data['pipeline']}")
    if out_trajectory:
        traj = data.get("trajectory")
        if traj is None:
            _fail(EXIT_USAGE, "--out-trajectory requires --simulate")
        from .analysis import Trajectory

        write_trajectory(out_trajectory, Trajectory(
            times=np.asarray(traj["times"]),
            states=np.zeros((len(traj["times"]), 0)),
            outputs=np.asarray(traj["outputs"]),
            inputs=np.asarray(traj["inputs"]),
            dt=traj["dt"],
        ))


@cli.command()
@click.option("--example", type=click.Choice(["msd", "rlc"]), required=True)
@click.option("--server", default=None, help="Remote service URL (default: in-process).")
def info(example, server):
    """Show a summary of a built-in example network."""
    with _client(server) as client:
        resp = client.get(f"/examples/{example}")
    if resp.status_code != 200:
        _fail(EXIT_USAGE, resp.text)
    data = resp.json()
    click.echo(f"name={data['name']}")
    click.echo(f"kind={data['system']['kind']}")
    click.echo(f"n={data['n']}")
    click.echo(f"m={data['m']}")
    click.echo(f"spectral_abscissa={data['spectral_abscissa']}")


@cli.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


def main():
    try:
        cli.main(standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(EXIT_USAGE)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_IO)
    except click.exceptions.Abort:
        sys.exit(EXIT_USAGE)
    except ParseError as exc:
        click.echo(f"error: line {exc.line}: {exc.reason}", err=True)
        sys.exit(EXIT_IO)
    except PhbalError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_INFEASIBLE)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
