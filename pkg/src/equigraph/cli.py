"""Command-line interface.

Subcommands: spectrum, check, classify, enumerate, rings-search, verify.
Reports render as human-readable text by default; --json emits a stable
canonical JSON document and --csv a CSV table where it makes sense.
Exit codes for `check`: 0 equal, 1 not equal, 2 error.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional

import click

from . import data as D
from . import graphs as G
from . import rings as R
from . import srg as S
from .exact import ExactValue, format_surd
from .spectra import (
    Approximate,
    UncertifiableBranch,
    check_equienergetic,
    discrepancy,
    energy,
)
from .verify import SUITES, run_suite

FORMATS = click.option(
    "--format", "fmt", type=click.Choice(["pretty", "json", "csv"]),
    default="pretty", show_default=True, help="output format")
JSON_FLAG = click.option("--json", "as_json", is_flag=True, help="shorthand for --format json")
CSV_FLAG = click.option("--csv", "as_csv", is_flag=True, help="shorthand for --format csv")


def _resolve_format(fmt: str, as_json: bool, as_csv: bool) -> str:
    if as_json:
        return "json"
    if as_csv:
        return "csv"
    return fmt


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("EQUIGRAPH_JOBS", "1")))
    except ValueError:
        return 1


def _render_value(v) -> object:
    if isinstance(v, ExactValue):
        return str(v)
    if isinstance(v, Approximate):
        return {"approx": v.value, "radius": v.radius}
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    return v


def _emit(report: dict, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(report, indent=2, sort_keys=False))
        return
    for key, value in report.items():
        if key == "spectrum" and isinstance(value, dict):
            click.echo("spectrum:")
            for entry in value["entries"]:
                rendered = entry["value"]
                if isinstance(rendered, dict):
                    rendered = f"{rendered['approx']!r}(+-{rendered['radius']:g})"
                click.echo(f"  [{rendered}]^{entry['mult']}")
        elif isinstance(value, dict):
            inner = " ".join(f"{k2}={v2}" for k2, v2 in value.items())
            click.echo(f"{key}: {inner}")
        else:
            click.echo(f"{key}: {value}")


# -- graph sources --------------------------------------------------------------------


_FAMILY_PARAM_NAMES = ("t", "n", "a", "b", "m", "q", "k")


def _family_params(kwargs) -> dict:
    return {name: kwargs[name] for name in _FAMILY_PARAM_NAMES if kwargs.get(name) is not None}


class SourceError(click.ClickException):
    exit_code = 2


def _load_source(family: Optional[str], file: Optional[str], ring: Optional[str],
                 srg: Optional[str], params: dict):
    """Resolve the graph source options to (label, spectrum, k, exact, graph)."""
    chosen = [x for x in (family, file, ring, srg) if x]
    if len(chosen) != 1:
        raise SourceError("provide exactly one of --family, --file, --ring, --srg")
    if family:
        exact = D.exact_spectrum_of_family(family, **params)
        graph = G.gen_named(family, **params)
        k = G.regularity(graph)
        if k is None:
            raise SourceError(f"family {family} with {params} is not regular")
        spec = exact if exact is not None else G.numeric_spectrum(graph)
        label = f"{family}({', '.join(f'{p}={v}' for p, v in params.items())})"
        return label, spec, k, exact is not None, graph
    if file:
        try:
            text = open(file, "r", encoding="utf-8").read()
            graph = G.read_graph(text)
        except (OSError, ValueError) as exc:
            raise SourceError(str(exc))
        k = G.regularity(graph)
        if k is None:
            raise SourceError("graph in file is not regular")
        return file, G.numeric_spectrum(graph), k, False, graph
    if ring:
        try:
            profile = R.RingProfile.parse(ring)
        except ValueError as exc:
            raise SourceError(str(exc))
        spec = R.unitary_spectrum(profile)
        return f"ring {profile}", spec, profile.units, True, None
    try:
        parts = [int(x) for x in srg.split(",")]
        if len(parts) != 4:
            raise ValueError
        p = S.SrgParams(*parts)
        spec = S.spectrum_of(p)
    except (ValueError, S.InfeasibleParams) as exc:
        raise SourceError(f"bad srg tuple {srg!r}: {exc}")
    return str(p), spec, p.k, True, None


def _source_options(fn):
    fn = click.option("--family", help="named family (crown, lattice, paley, gp, ...)")(fn)
    fn = click.option("--file", help="graph file: 'n loops' header then edge lines")(fn)
    fn = click.option("--ring", help="ring profile q1:m1,q2:m2,...")(fn)
    fn = click.option("--srg", help="strongly regular tuple n,k,e,d")(fn)
    for name in _FAMILY_PARAM_NAMES:
        fn = click.option(f"--{name}", type=int, default=None,
                          help=f"family parameter {name}")(fn)
    return fn


@click.group()
def main():
    """Exact equienergy analysis of regular graphs and their complements."""


@main.command()
@_source_options
@click.option("--assume-exact", is_flag=True,
              help="trust interval midpoints at delta branch points")
@FORMATS
@JSON_FLAG
@CSV_FLAG
def spectrum(family, file, ring, srg, assume_exact, fmt, as_json, as_csv, **params):
    """Spectrum, energy and discrepancy breakdown of a graph source."""
    fmt = _resolve_format(fmt, as_json, as_csv)
    label, spec, k, exact, _ = _load_source(family, file, ring, srg, _family_params(params))
    report = {
        "command": "spectrum",
        "source": label,
        "n": spec.n,
        "degree": k,
        "exact": exact,
        "spectrum": spec.to_json_dict(),
        "energy": _render_value(energy(spec)),
    }
    try:
        breakdown = discrepancy(spec, assume_exact=assume_exact)
        report["discrepancy"] = {
            "sigma": breakdown.sigma,
            "T": breakdown.T,
            "m0": breakdown.m0,
            "S": str(breakdown.S),
            "total": str(breakdown.delta_total),
        }
    except UncertifiableBranch as exc:
        report["discrepancy"] = f"uncertifiable: {exc}"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["value", "mult"])
        for entry in report["spectrum"]["entries"]:
            value = entry["value"]
            writer.writerow([value if isinstance(value, str) else value["approx"],
                             entry["mult"]])
        click.echo(out.getvalue().rstrip("\n"))
        return
    _emit(report, fmt)


@main.command()
@_source_options
@click.option("--loops", is_flag=True, help="the source graph carries loops")
@click.option("--assume-exact", is_flag=True,
              help="trust interval midpoints at delta branch points")
@FORMATS
@JSON_FLAG
@CSV_FLAG
def check(family, file, ring, srg, loops, assume_exact, fmt, as_json, as_csv, **params):
    """Equienergy verdict for a graph against its complement.

    Exit code 0 when equal, 1 when not, 2 on errors (including
    uncertifiable eigenvalue intervals).
    """
    fmt = _resolve_format(fmt, as_json, as_csv)
    label, spec, k, exact, _ = _load_source(family, file, ring, srg, _family_params(params))
    try:
        report = check_equienergetic(spec, k=k, loops=loops, assume_exact=assume_exact)
    except UncertifiableBranch as exc:
        raise SourceError(f"uncertifiable eigenvalue interval: {exc}")
    payload = {
        "command": "check",
        "source": label,
        "n": spec.n,
        "degree": k,
        "equal": report.equal,
        "delta": None if report.delta is None else str(report.delta),
        "energy": _render_value(report.energy),
        "energy_complement": _render_value(report.energy_complement),
        "routes_agree": report.routes_agree,
        "provenance": "exact closed form" if exact else "numeric (certified intervals)",
    }
    _emit(payload, fmt)
    sys.exit(0 if report.equal else 1)


def _class_name(cls) -> str:
    if isinstance(cls, S.Conference):
        return f"conference(d={cls.d})"
    if isinstance(cls, S.CaseB):
        return f"square-count(h={cls.h},l={cls.l})"
    if isinstance(cls, S.CaseC):
        return f"odd-square-count(h={cls.h},l={cls.l})"
    return f"not-equienergetic({cls.reason})" if cls.reason else "not-equienergetic"


@main.command()
@click.option("--srg", required=True, help="strongly regular tuple n,k,e,d")
@FORMATS
@JSON_FLAG
@CSV_FLAG
def classify(srg, fmt, as_json, as_csv):
    """Classify an srg tuple under the complementary-equienergy trichotomy."""
    fmt = _resolve_format(fmt, as_json, as_csv)
    try:
        parts = [int(x) for x in srg.split(",")]
        if len(parts) != 4:
            raise ValueError("expected four comma-separated integers")
        p = S.SrgParams(*parts)
        data = S.eigen_data(p)
    except (ValueError, S.InfeasibleParams) as exc:
        raise SourceError(f"bad srg tuple {srg!r}: {exc}")
    if not S.is_primitive(p):
        cls_name = "imprimitive"
    else:
        cls_name = _class_name(S.classify(p))
    oa = S.oa_params(p)
    payload = {
        "command": "classify",
        "params": str(p),
        "class": cls_name,
        "alpha": data.alpha,
        "r": format_surd(data.r),
        "s": format_surd(data.s),
        "m_r": _render_value(data.m_r),
        "m_s": _render_value(data.m_s),
        "energy": str(S.energy_closed(p)),
        "oa": f"OA({oa[0]},{oa[1]})" if oa else "",
    }
    _emit(payload, fmt)


def _enumerate_rows(bounds: tuple[int, int]) -> list[dict]:
    lo, hi = bounds
    rows = []
    for p, cls in S.enumerate_equien(hi):
        if p.n < lo:
            continue
        data = S.eigen_data(p)
        oa = S.oa_params(p)
        rows.append({
            "n": p.n, "k": p.k, "e": p.e, "d": p.d,
            "class": _class_name(cls),
            "alpha": data.alpha,
            "r": format_surd(data.r),
            "s": format_surd(data.s),
            "m_r": _render_value(data.m_r),
            "m_s": _render_value(data.m_s),
            "energy": str(S.energy_closed(p)),
            "oa": f"OA({oa[0]},{oa[1]})" if oa else "",
        })
    return rows


ENUM_COLUMNS = ["n", "k", "e", "d", "class", "alpha", "r", "s", "m_r", "m_s", "energy", "oa"]


@main.command()
@click.option("--n-max", type=int, required=True, help="largest vertex count")
@click.option("--jobs", type=int, default=None,
              help="worker processes (default: EQUIGRAPH_JOBS or 1)")
@FORMATS
@JSON_FLAG
@CSV_FLAG
def enumerate(n_max, jobs, fmt, as_json, as_csv):
    """Stream every equienergetic parameter tuple with n <= N as CSV/JSON."""
    fmt = _resolve_format(fmt, as_json, as_csv)
    jobs = jobs if jobs is not None else _default_jobs()
    if jobs > 1:
        from multiprocessing import Pool
        step = max(64, n_max // (4 * jobs))
        chunks = [(lo, min(lo + step - 1, n_max)) for lo in range(2, n_max + 1, step)]
        with Pool(jobs) as pool:
            parts = pool.map(_enumerate_rows, chunks)
        rows = [row for part in parts for row in part]
    else:
        rows = _enumerate_rows((2, n_max))
    rows.sort(key=lambda r: (r["n"], r["k"], r["d"]))
    if fmt == "json":
        click.echo(json.dumps({"command": "enumerate", "n_max": n_max, "rows": rows},
                              indent=2))
        return
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=ENUM_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    click.echo(out.getvalue().rstrip("\n"))


@main.command("rings-search")
@click.option("--s", "s_factors", type=int, required=True, help="odd number of field factors")
@click.option("--qmax", type=int, required=True, help="largest field size")
@FORMATS
@JSON_FLAG
@CSV_FLAG
def rings_search(s_factors, qmax, fmt, as_json, as_csv):
    """Search products of s fields that are equienergetic with their complements."""
    fmt = _resolve_format(fmt, as_json, as_csv)
    try:
        hits = R.search_field_products(s_factors, qmax)
    except ValueError as exc:
        raise SourceError(str(exc))
    payload = {
        "command": "rings-search",
        "s": s_factors,
        "q_max": qmax,
        "solutions": [list(t) for t in hits],
    }
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow([f"q{i + 1}" for i in range(s_factors)])
        for t in hits:
            writer.writerow(list(t))
        click.echo(out.getvalue().rstrip("\n"))
        return
    _emit(payload, fmt)


@main.command()
@click.argument("suite", type=click.Choice(sorted(SUITES)))
@FORMATS
@JSON_FLAG
@CSV_FLAG
def verify(suite, fmt, as_json, as_csv):
    """Run one verification suite; nonzero exit when any claim fails."""
    fmt = _resolve_format(fmt, as_json, as_csv)
    results = run_suite(suite)
    if fmt == "json":
        click.echo(json.dumps({
            "command": "verify",
            "suite": suite,
            "results": [
                {"claim": r.claim, "passed": r.passed, "details": r.details}
                for r in results
            ],
        }, indent=2))
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            line = f"[{mark}] {r.claim}"
            if r.details:
                line += f"  ({r.details})"
            click.echo(line)
    if not all(r.passed for r in results):
        sys.exit(1)


if __name__ == "__main__":
    main()
