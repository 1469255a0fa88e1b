"""Command-line interface.

Usage:
    matchmoments pgf --n 2 --format csv
    matchmoments moments --n-min 1 --n-max 200 --r-max 14 --out moments.csv
    matchmoments fit --target mean --n-max 12
    matchmoments asympt --target variance --order 9
    matchmoments verify --r-max 14 --format json
    matchmoments oracle --n 4
    matchmoments sample --n 50 --trials 100000 --seed 1

Exit status: 0 success, 1 verification or fit failure, 2 usage error,
3 internal error.  Exact numbers are always printed as ``p/q``.
"""
from __future__ import annotations

import csv
import io
import json
import re
import sys
import time
import traceback
from contextlib import contextmanager

import click

from . import __version__
from .asymptotics import expand_asymptotic, series_limit
from .cache import MomentCache
from .exact import rat_str
from .guess import FitError, FitRequest, fit_rational
from .model import build_pgf
from .moments import DEFAULT_R_MAX, moment_table_range
from .normality import (DEFAULT_N_MAX, DEFAULT_SERIES_ORDER, fit_raw_moments, normalized_from_raw,
                        central_from_raw, verify_normality)
from .oracle import enumerate_matchings, sample_matchings

SCHEMA_VERSION = 1
EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 1, 2, 3

_TARGET_RE = re.compile(r"^(mean|variance|m(\d+)|mu(\d+)|alpha(\d+))$")


class Output:
    """Collects one command's results and writes them in the requested format."""

    def __init__(self, command: str, fmt: str, out: str | None, parameters: dict):
        self.command = command
        self.fmt = fmt
        self.out = out
        self.parameters = parameters
        self.started = time.perf_counter()

    def emit(self, results: dict, text: str, header: list[str], rows: list[list]) -> None:
        if self.fmt == "json":
            doc = {
                "schema_version": SCHEMA_VERSION,
                "command": self.command,
                "parameters": self.parameters,
                "results": results,
                "artifact_version": __version__,
                "timing_ms": round((time.perf_counter() - self.started) * 1000, 3),
            }
            payload = json.dumps(doc, indent=2) + "\n"
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
            payload = buf.getvalue()
        else:
            payload = text if text.endswith("\n") else text + "\n"
        if self.out:
            try:
                with open(self.out, "w", newline="") as fh:
                    fh.write(payload)
            except OSError as exc:
                raise click.FileError(self.out, hint=exc.strerror) from exc
        else:
            click.echo(payload, nl=False)


def common_options(default_format: str = "plain"):
    def deco(f):
        f = click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
                         help="Worker count for parallel parts.")(f)
        f = click.option("--cache-dir", type=click.Path(file_okay=False), envvar="MATCHMOMENTS_CACHE_DIR",
                         default=None, help="Directory for cached moment tables.")(f)
        f = click.option("--out", type=click.Path(dir_okay=False), default=None,
                         help="Write output here instead of stdout.")(f)
        f = click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]), default=default_format,
                         show_default=True)(f)
        return f
    return deco


@contextmanager
def usage_errors():
    try:
        yield
    except FitError:
        raise
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _tables(n_min, n_max, r_max, cache_dir, threads):
    if cache_dir:
        return MomentCache(cache_dir).tables(n_min, n_max, r_max, threads)
    return moment_table_range(n_min, n_max, r_max, threads)


def _alpha_label(r: int) -> str:
    return f"alpha{r}" if r % 2 == 0 else f"alpha{r}_sq"


@click.group()
@click.version_option(__version__, prog_name="matchmoments")
def cli():
    """Exact moments of the same-sex marriage count in random perfect matchings."""


@cli.command()
@click.option("--n", "n", type=int, required=True, help="2n men and 2n women.")
@common_options()
def pgf(n, fmt, out, cache_dir, threads):
    """Exact distribution P_n(x) of the number of same-sex couples."""
    if n < 1:
        raise click.BadParameter("n must be >= 1", param_hint="--n")
    o = Output("pgf", fmt, out, {"n": n})
    dist = build_pgf(n)
    rows = [[j, rat_str(p)] for j, p in enumerate(dist.coefficients) if p]
    text = "\n".join([f"# n={n}, total matchings {dist.total_matchings}", "j\tprobability"]
                     + [f"{j}\t{p}" for j, p in rows])
    results = {
        "n": n,
        "total_matchings": str(dist.total_matchings),
        "coefficients": {str(j): p for j, p in rows},
    }
    o.emit(results, text, ["j", "probability"], rows)


@cli.command()
@click.option("--n-min", type=int, default=1, show_default=True)
@click.option("--n-max", type=int, required=True)
@click.option("--r-max", type=int, default=DEFAULT_R_MAX, show_default=True)
@common_options("csv")
def moments(n_min, n_max, r_max, fmt, out, cache_dir, threads):
    """Raw, central and normalized moments for a range of n."""
    if not 1 <= n_min <= n_max:
        raise click.UsageError(f"invalid n range {n_min}..{n_max}")
    if r_max < 2:
        raise click.BadParameter("must be >= 2", param_hint="--r-max")
    o = Output("moments", fmt, out, {"n_min": n_min, "n_max": n_max, "r_max": r_max})
    with usage_errors():
        tables = _tables(n_min, n_max, r_max, cache_dir, threads)
    header = (["n"] + [f"m{r}" for r in range(1, r_max + 1)] + [f"mu{r}" for r in range(2, r_max + 1)]
              + [_alpha_label(r) for r in range(2, r_max + 1)])
    rows = []
    for t in tables:
        rows.append([t.n] + [rat_str(t.raw[r]) for r in range(1, r_max + 1)]
                    + [rat_str(t.central[r]) for r in range(2, r_max + 1)]
                    + [rat_str(t.alpha(r)) for r in range(2, r_max + 1)])
    text = "\n".join(["\t".join(header)] + ["\t".join(str(x) for x in row) for row in rows])
    results = {"columns": header, "rows": [[str(x) for x in row] for row in rows]}
    o.emit(results, text, header, rows)


def _parse_target(target: str) -> tuple[str, int]:
    m = _TARGET_RE.match(target)
    if not m:
        raise click.BadParameter("expected mean, variance, m<r>, mu<r> or alpha<r>", param_hint="--target")
    if target == "mean":
        return "m", 1
    if target == "variance":
        return "mu", 2
    kind = "m" if m.group(2) else "mu" if m.group(3) else "alpha"
    r = int(m.group(2) or m.group(3) or m.group(4))
    if kind == "m" and r < 1 or kind == "mu" and r < 2 or kind == "alpha" and r < 3:
        raise click.BadParameter(f"order too small for {kind}", param_hint="--target")
    return kind, r


def _target_values(kind, r, tables):
    if kind == "m":
        return [t.raw[r] for t in tables]
    if kind == "mu":
        return [t.central[r] for t in tables]
    return [t.alpha(r) for t in tables]


def _fit_target(target, n_max, method, max_degree, verification, cache_dir, threads):
    kind, r = _parse_target(target)
    with usage_errors():
        tables = _tables(1, n_max, max(r, 2), cache_dir, threads)
    if method in ("auto", "direct"):
        pts = tuple((t.n, v) for t, v in zip(tables, _target_values(kind, r, tables)))
        try:
            with usage_errors():
                res = fit_rational(FitRequest(pts, max_total_degree=max_degree, verification_points=verification))
            return res.function, "direct", res
        except FitError:
            if method == "direct":
                raise
    raw = fit_raw_moments(tables, r)
    if r not in raw:
        raise FitError(f"raw moments up to order {r} cannot all be fitted on n = 1..{n_max}")
    if kind == "m":
        f = raw[r]
    elif kind == "mu":
        f = central_from_raw(raw, r)
    else:
        f = normalized_from_raw(raw, r)
    if any(f(t.n) != v for t, v in zip(tables, _target_values(kind, r, tables))):
        raise FitError("derived function does not reproduce the data")
    return f, "derived", None


def fit_options(f):
    f = click.option("--method", type=click.Choice(["auto", "direct", "derived"]), default="auto", show_default=True,
                     help="direct: guess from the target's own values; derived: guess raw moments and combine.")(f)
    f = click.option("--verification-points", type=int, default=None)(f)
    f = click.option("--max-degree", type=int, default=None, help="Largest total degree tried.")(f)
    f = click.option("--n-max", type=int, default=DEFAULT_N_MAX, show_default=True)(f)
    f = click.option("--target", required=True, help="mean, variance, m<r>, mu<r>, alpha<r> (odd r: square).")(f)
    return f


@cli.command()
@fit_options
@common_options()
def fit(target, n_max, max_degree, verification_points, method, fmt, out, cache_dir, threads):
    """Guess a rational function of n for a moment sequence."""
    o = Output("fit", fmt, out, {"target": target, "n_max": n_max, "max_degree": max_degree,
                                 "verification_points": verification_points, "method": method})
    f, used, res = _fit_target(target, n_max, method, max_degree, verification_points, cache_dir, threads)
    results = {"target": target, "method": used, "function": f.to_dict(), "degrees": list(f.degrees)}
    if res is not None:
        results.update(points_used=res.points_used, verified_on=res.verified_on)
    rows = ([["numerator", k, str(c)] for k, c in enumerate(f.num)]
            + [["denominator", k, str(c)] for k, c in enumerate(f.den)])
    o.emit(results, f.to_str(), ["part", "power", "coefficient"], rows)


@cli.command()
@fit_options
@click.option("--order", type=click.IntRange(min=0), default=DEFAULT_SERIES_ORDER, show_default=True)
@common_options()
def asympt(target, n_max, max_degree, verification_points, method, order, fmt, out, cache_dir, threads):
    """Large-n expansion of a fitted moment sequence."""
    o = Output("asympt", fmt, out, {"target": target, "n_max": n_max, "order": order, "method": method})
    f, used, _ = _fit_target(target, n_max, method, max_degree, verification_points, cache_dir, threads)
    s = expand_asymptotic(f, order)
    lim = series_limit(s)
    results = {"target": target, "method": used, "function": f.to_dict(), "series": s.to_dict(),
               "limit": lim.to_dict()}
    rows = [[e, rat_str(c)] for c, e in s.terms()]
    text = f"{target} = {f.to_str()}\n  ~ {s.render()}\n  limit: {lim}"
    o.emit(results, text, ["exponent", "coefficient"], rows)


@cli.command()
@click.option("--n-max", type=int, default=DEFAULT_N_MAX, show_default=True,
              help="Data range n = 1..n-max (200 mirrors the original computation).")
@click.option("--r-max", type=int, default=14, show_default=True)
@click.option("--order", type=click.IntRange(min=0), default=DEFAULT_SERIES_ORDER, show_default=True)
@common_options()
@click.pass_context
def verify(ctx, n_max, r_max, order, fmt, out, cache_dir, threads):
    """Check that normalized moments 3..r-max tend to those of N(0, 1)."""
    if r_max < 3:
        raise click.BadParameter("must be >= 3", param_hint="--r-max")
    if n_max < 1:
        raise click.BadParameter("must be >= 1", param_hint="--n-max")
    o = Output("verify", fmt, out, {"n_max": n_max, "r_max": r_max, "order": order})
    with usage_errors():
        tables = _tables(1, n_max, r_max, cache_dir, threads)
        report = verify_normality(n_max, r_max, order, tables=tables)
    lines = [f"normality check, n = 1..{n_max}, moments 3..{r_max}, series order {order}"]
    rows = []
    for m in report.per_moment:
        label = _alpha_label(m.r)
        lim = str(m.limit) if m.limit else "-"
        verdict = "pass" if m.verdict else "fail"
        lines.append(f"  {label:<10} limit {lim:<8} expected {rat_str(m.expected_limit):<8} {verdict}"
                     + (f"  ({m.diagnostics})" if m.diagnostics else ""))
        lines.append(f"             ~ {m.series.render() if m.series else '-'}")
        rows.append([m.r, label, m.fitted_function.to_str() if m.fitted_function else "",
                     m.series.render() if m.series else "", lim, rat_str(m.expected_limit), verdict])
    lines.append(f"overall: {'pass' if report.overall else 'fail'}")
    o.emit(report.to_dict(), "\n".join(lines),
           ["r", "quantity", "fitted_function", "series", "limit", "expected_limit", "verdict"], rows)
    if not report.overall:
        ctx.exit(EXIT_FAIL)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--allow-large", is_flag=True, help="Permit n > 4 (hundreds of millions of matchings).")
@common_options()
def oracle(n, allow_large, fmt, out, cache_dir, threads):
    """Exhaustively enumerate all perfect matchings (small n)."""
    o = Output("oracle", fmt, out, {"n": n, "allow_large": allow_large})
    with usage_errors():
        dist = enumerate_matchings(n, allow_large=allow_large)
    rows = [[j, c] for j, c in sorted(dist.counts.items()) if c]
    text = "\n".join([f"# n={n}, {dist.total} matchings", "j\tcount"] + [f"{j}\t{c}" for j, c in rows])
    o.emit({"n": n, "total": str(dist.total), "counts": {str(j): c for j, c in rows}}, text, ["j", "count"], rows)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--trials", type=click.IntRange(min=1), default=100_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@common_options()
def sample(n, trials, seed, fmt, out, cache_dir, threads):
    """Monte Carlo sample of uniform random perfect matchings."""
    o = Output("sample", fmt, out, {"n": n, "trials": trials, "seed": seed, "threads": threads})
    with usage_errors():
        s = sample_matchings(n, trials, seed, workers=threads)
    rows = [[j, c] for j, c in sorted(s.empirical_counts.items())]
    text = "\n".join([f"# n={n}, {trials} trials, seed {seed}, {s.generator}, {s.workers} worker(s)",
                      "moments m1..m4: " + ", ".join(f"{m:.6g}" for m in s.empirical_moments),
                      "j\tcount"] + [f"{j}\t{c}" for j, c in rows])
    o.emit(s.to_dict(), text, ["j", "count"], rows)


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="matchmoments", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FAIL
    except FitError as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_FAIL
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
