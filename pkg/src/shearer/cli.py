"""Command-line surface: generation, certification, and the corpus runner.

Exit codes: 0 all requested certificates pass; 1 infrastructure error (bad
file, parse error, solver budget); 2 hypothesis violation (triangle found,
isolated vertex, disconnected input where connectivity is required); 3 a
certificate genuinely failed. Codes 2 and 3 are kept distinct because a
failing certificate on a valid input would contradict proved theorems and
must be loudly distinguishable from misuse.
"""

from __future__ import annotations

import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import click

from . import __version__
from .certify import (
    bound_report,
    dcore_reduction_check,
    edge_bound_mixture,
    verify_local_shearer,
    verify_spectral_bound,
    verify_weighted_theorem,
)
from .corpus import DEFAULT_SEED, corpus
from .dynamics import lp_witness_inputs, mix_process
from .errors import (
    Disconnected,
    IsolatedVertex,
    NotTriangleFree,
    ParseError,
    PricingBudgetExceeded,
    ShearerError,
)
from .generators import generate
from .graph import components, is_triangle_free
from .graphio import parse_graph_file, write_edge_list
from .jsonutil import dumps, write_atomic
from .lp import chi_fractional
from .spectral import spectral_of, spectral_radius
from .weights import WeightFn, degree_weights, random_weights, unit_weights

EXIT_PASS = 0
EXIT_INFRA = 1
EXIT_HYPOTHESIS = 2
EXIT_CERT_FAILED = 3

_HYPOTHESIS_ERRORS = (NotTriangleFree, IsolatedVertex, Disconnected)


def _seed_default() -> int:
    env = os.environ.get("SHEARER_SEED")
    return int(env) if env else DEFAULT_SEED


def _emit(report: dict, output: str | None, pretty: bool = False):
    text = dumps(report)
    if output:
        write_atomic(output, text)
    else:
        click.echo(text, nl=False)
    if pretty and "per_vertex" in report:
        _pretty_table(report)


def _pretty_table(report: dict):
    click.echo(f"-- {report.get('theorem', 'report')}  pass={report.get('pass')} "
               f"worst_slack={report.get('worst_slack')}")
    click.echo(f"{'v':>5} {'target':>14} {'achieved':>14} {'slack':>12}")
    for row in report["per_vertex"]:
        t, a = float(row["target"]), float(row["achieved"])
        click.echo(f"{row['v']:>5} {t:>14.8f} {a:>14.8f} {a - t:>12.3e}")


def _fail(code: int, kind: str, message: str, output: str | None):
    _emit({"error": kind, "message": message}, output)
    sys.exit(code)


def _guarded(fn, output):
    try:
        return fn()
    except _HYPOTHESIS_ERRORS as exc:
        _fail(EXIT_HYPOTHESIS, type(exc).__name__, str(exc), output)
    except (ParseError, OSError, PricingBudgetExceeded) as exc:
        _fail(EXIT_INFRA, type(exc).__name__, str(exc), output)
    except ShearerError as exc:
        _fail(EXIT_INFRA, type(exc).__name__, str(exc), output)


def _load(path: str, output):
    return _guarded(lambda: parse_graph_file(path), output)


def _parse_weights(spec: str, g, seed: int) -> WeightFn:
    if spec == "unit":
        return unit_weights(g.n)
    if spec == "degree":
        return degree_weights(g)
    if spec.startswith("file:"):
        with open(spec[5:]) as fh:
            values = [float(tok) for tok in fh.read().split()]
        if len(values) != g.n:
            raise ShearerError(f"weights file has {len(values)} values for {g.n} vertices")
        return WeightFn(tuple(values))
    if spec.startswith("random:"):
        return random_weights(g.n, random.Random(f"weights:{int(spec[7:])}"))
    if spec == "random":
        return random_weights(g.n, random.Random(f"weights:{seed}"))
    raise ShearerError(f"unknown weights source {spec!r}")


@click.group()
@click.version_option(__version__)
def main():
    """Fractional coloring certificates for triangle-free graphs."""


@main.command()
@click.option("--kind", required=True,
              type=click.Choice(["cycle", "petersen", "kneser", "mycielski", "tfp", "bipartite"]))
@click.option("--n", type=int, default=None, help="Vertex count / ground-set size.")
@click.option("--k", type=int, default=None, help="Subset size for kneser.")
@click.option("--a", type=int, default=None, help="Left side size for bipartite.")
@click.option("--b", type=int, default=None, help="Right side size for bipartite.")
@click.option("--p", type=float, default=0.5, show_default=True, help="Bipartite edge probability.")
@click.option("--seed", type=int, default=None, help="Generator seed (default SHEARER_SEED or built-in).")
@click.option("--input", "input_path", type=str, default=None,
              help="Base graph file for mycielski (default: cycle on --n vertices).")
@click.option("-o", "--output", type=str, default=None, help="Write edge-list here (default stdout).")
def gen(kind, n, k, a, b, p, seed, input_path, output):
    """Generate a corpus graph and emit it in edge-list format."""
    seed = seed if seed is not None else _seed_default()

    def build():
        if kind == "mycielski":
            if input_path:
                base = parse_graph_file(input_path)
            else:
                if n is None:
                    raise ShearerError("mycielski needs --input FILE or --n for a cycle base")
                base = generate("cycle", n=n)
            return generate("mycielski", base=base)
        return generate(kind, n=n, k=k, a=a, b=b, p=p, seed=seed)

    g = _guarded(build, output)
    comment = f"shearer gen --kind {kind}"
    if output:
        write_edge_list(g, output, comment=comment)
    else:
        from .graphio import edge_list_text

        click.echo(edge_list_text(g, comment=comment), nl=False)


@main.command()
@click.argument("input_path", metavar="INPUT")
@click.option("--exact", is_flag=True, help="Exact rational arithmetic.")
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("-o", "--output", type=str, default=None)
def chif(input_path, exact, tol, output):
    """Fractional chromatic number with a dual certificate."""
    g = _load(input_path, output)
    result = _guarded(lambda: chi_fractional(g, mode="exact" if exact else "float", tol=tol), output)
    report = {"command": "chif", "n": g.n, "m": g.m}
    report.update(result.to_jsonable())
    _emit(report, output)


@main.command()
@click.argument("input_path", metavar="INPUT")
@click.option("--weights", "weights_spec", default="unit", show_default=True,
              help="unit | degree | perron | file:PATH | random[:SEED]")
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--pretty", is_flag=True, help="Also print a per-vertex table.")
@click.option("-o", "--output", type=str, default=None)
def verify(input_path, weights_spec, tol, pretty, output):
    """Certify the weighted local bound for one weight source."""
    g = _load(input_path, output)

    def run():
        if weights_spec == "perron":
            certs = [verify_spectral_bound(c, tol=tol) for c in components(g)]
            report = {
                "command": "verify",
                "weights": "perron",
                "components": [c.to_jsonable() for c in certs],
                "pass": all(c.passed for c in certs),
            }
            return report, all(c.passed for c in certs)
        w = _parse_weights(weights_spec, g, _seed_default())
        if weights_spec == "unit":
            cert = verify_local_shearer(g, tol=tol)
        else:
            cert = verify_weighted_theorem(g, w, tol=tol)
        report = {"command": "verify", "weights": weights_spec}
        report.update(cert.to_jsonable())
        return report, cert.passed

    report, passed = _guarded(run, output)
    _emit(report, output, pretty=pretty)
    if not passed:
        sys.exit(EXIT_CERT_FAILED)


@main.command()
@click.argument("input_path", metavar="INPUT")
@click.option("-o", "--output", type=str, default=None)
def spectral(input_path, output):
    """Spectral radius and Perron data per connected component."""
    g = _load(input_path, output)

    def run():
        per_comp = []
        for c in components(g):
            sr = spectral_radius(c)
            per_comp.append({
                "n": c.n,
                "vertices": list(c.parent_ids) if c.parent_ids else list(range(c.n)),
                "rho": sr.rho,
                "perron": list(sr.perron),
                "residual": sr.residual,
                "iterations": sr.iterations,
            })
        return {
            "command": "spectral",
            "n": g.n,
            "m": g.m,
            "rho": spectral_of(g) if g.n else 0.0,
            "components": per_comp,
        }

    _emit(_guarded(run, output), output)


@main.command()
@click.argument("input_path", metavar="INPUT")
@click.option("--strip-isolated", is_flag=True, help="Drop isolated vertices before certifying.")
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("-o", "--output", type=str, default=None)
def edgebound(input_path, strip_isolated, tol, output):
    """Certify the three-way mixture bound on per-vertex marginals."""
    g = _load(input_path, output)
    if strip_isolated:
        from .graph import induced_subgraph

        keep = [v for v in range(g.n) if g.degree(v) > 0]
        g = induced_subgraph(g, keep)
    cert = _guarded(lambda: edge_bound_mixture(g, tol=tol), output)
    report = {"command": "edgebound"}
    report.update(cert.to_jsonable())
    _emit(report, output)
    if not cert.passed:
        sys.exit(EXIT_CERT_FAILED)


@main.command()
@click.argument("input_path", metavar="INPUT")
@click.option("--eps", type=float, required=True, help="Mixing probability in (0, 1).")
@click.option("--seed", type=int, default=None, help="Seed for the random weight function.")
@click.option("--weights", "weights_spec", default="unit", show_default=True,
              help="unit | random[:SEED]")
@click.option("-o", "--output", type=str, default=None)
def dynamics(input_path, eps, seed, weights_spec, output):
    """One audited mixing step with LP-optimal inputs."""
    g = _load(input_path, output)
    seed = seed if seed is not None else _seed_default()

    def run():
        if not is_triangle_free(g):
            raise NotTriangleFree("dynamics requires a triangle-free graph")
        w = _parse_weights(weights_spec, g, seed).normalize()
        d_main, d_sub = lp_witness_inputs(g, w, eps)
        _, report = mix_process(g, w, eps, d_main, d_sub)
        payload = {"command": "dynamics", "n": g.n, "m": g.m, "seed": seed}
        payload.update(report.to_jsonable())
        max_resid = max(abs(r) for r in report.identity_residual)
        claims_ok = all(
            lhs is None or lhs <= rhs + 1e-12
            for lhs, rhs in zip(report.claim_lhs, report.claim_rhs)
        )
        ode_ok = max(abs(o) for o in report.ode_cancellation) <= 1e-9
        payload["max_identity_residual"] = max_resid
        payload["pass"] = bool(max_resid <= 1e-9 and claims_ok and ode_ok)
        return payload

    payload = _guarded(run, output)
    _emit(payload, output)
    if not payload["pass"]:
        sys.exit(EXIT_CERT_FAILED)


@main.command()
@click.argument("input_path", metavar="INPUT")
@click.option("-o", "--output", type=str, default=None)
def bounds(input_path, output):
    """Report every upper-bound formula next to the exact chi_f."""
    g = _load(input_path, output)
    report = _guarded(lambda: bound_report(g), output)
    report["command"] = "bounds"
    _emit(report, output)


def _corpus_job(args) -> dict:
    index, name, seed = args
    g = dict(corpus(seed))[name]
    entry = {"index": index, "name": name, "n": g.n, "m": g.m}
    checks = {}
    chi = chi_fractional(g, mode="float")
    checks["chi_f"] = {"value": chi.value, "gap": chi.gap, "pass": chi.gap <= 1e-8}
    cert = verify_local_shearer(g)
    checks["local_shearer"] = {"worst_slack": cert.worst_slack, "pass": cert.passed}
    cert = verify_spectral_bound(g)
    checks["spectral"] = {
        "rho": cert.info["rho"],
        "bound": cert.info["spectral_bound"],
        "chi_f": float(cert.info["chi_f"]),
        "pass": cert.passed,
    }
    cert = edge_bound_mixture(g)
    checks["edge_mixture"] = {"worst_slack": cert.worst_slack, "pass": cert.passed}
    for d in (2, 3, 4):
        cert = dcore_reduction_check(g, d)
        checks[f"dcore_{d}"] = {"worst_slack": cert.worst_slack, "pass": cert.passed}
    entry["checks"] = checks
    entry["pass"] = all(c["pass"] for c in checks.values())
    return entry


@main.command("corpus")
@click.option("--filter", "name_filter", type=str, default=None, help="Substring filter on graph names.")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("-o", "--output", type=str, default=None)
def corpus_cmd(name_filter, jobs, seed, output):
    """Run every certifier over the built-in corpus."""
    seed = seed if seed is not None else _seed_default()
    names = [name for name, _ in corpus(seed)]
    if name_filter:
        names = [n for n in names if name_filter in n]
    tasks = [(i, name, seed) for i, name in enumerate(names)]

    def run():
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                entries = list(pool.map(_corpus_job, tasks))
        else:
            entries = [_corpus_job(t) for t in tasks]
        return entries

    entries = _guarded(run, output)
    report = {
        "command": "corpus",
        "seed": seed,
        "graphs": entries,
        "pass": all(e["pass"] for e in entries),
    }
    _emit(report, output)
    if not report["pass"]:
        sys.exit(EXIT_CERT_FAILED)


if __name__ == "__main__":
    main()
