"""Command-line interface.

Usage:
    circres resist --n 6 --jumps 1,2 --l 3 --mode exact
    circres walk --n 6 --l 1 --trials 100000 --seed 42
    circres kirchhoff --n 6
    circres verify --n-range 5..40 --check foster
    circres sweep --n-range 5..20 --format csv -o table.csv

Exit codes: 0 success, 1 bad input, 2 a verification check failed.
Options may also come from a ``key = value`` file given as
``circres --config FILE <command> ...``; command-line flags win.
"""

from __future__ import annotations

import csv
import io
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import __version__
from .circulant import CirculantSpec, build_circulant
from .closed_form import (
    UNREACHABLE,
    c2_resistance,
    c12_kirchhoff,
    c12_resistance,
    exact_kirchhoff,
    exact_resistance,
    has_closed_form,
    identity_suite,
    trig_identity_report,
    inverse_sine_square_sum,
    inverse_cosine_sum,
    inverse_cosine_sum_fibonacci,
)
from .errors import CirculantError
from .oracle import equivalence_sweep, foster_audit
from .report import VerificationReport, canonical_json
from .spectral import (
    kirchhoff_spectral,
    resistance_spectral,
    trig_power_sum_direct,
    trig_power_sum_exact,
)
from .walk import fpt_closed, fpt_exact, mfpt_closed, mfpt_exact, simulate_fpt
from .spectral import eigentime_mfpt

DEFAULT_SEED = 20240601
CROSS_CHECK_RTOL = 1e-9
CSV_HEADER = ["n", "l", "resistance_exact", "resistance_float", "fpt_exact",
              "kirchhoff_exact", "mfpt_exact"]
CHECK_NAMES = ["identities", "trig", "foster", "equivalence", "hitting", "recursion",
               "c2", "kirchhoff", "schwatt"]


class VerificationFailed(Exception):
    pass


# -- parsing -----------------------------------------------------------------

def parse_jumps(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise click.BadParameter(f"jumps must be comma-separated integers, got {text!r}")


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise click.BadParameter(f"expected LO..HI, got {text!r}")
    if b < a:
        raise click.BadParameter(f"empty range {text!r}")
    return range(a, b + 1)


def read_config(path: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise click.BadParameter(f"{path}:{lineno}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


# -- rendering ---------------------------------------------------------------

def _exact_str(x) -> str:
    return "unreachable" if x is UNREACHABLE else str(Fraction(x))


def _float_val(x):
    return "unreachable" if x is UNREACHABLE else float(x)


def _scalar_text(v) -> str:
    if v is UNREACHABLE:
        return "unreachable"
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _json_value(v):
    if v is UNREACHABLE:
        return "unreachable"
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return str(Fraction(v))
    return v


def _emit(text: str, output: str | None) -> None:
    if output:
        try:
            with open(output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise click.BadParameter(f"cannot write {output}: {exc}")
    else:
        click.echo(text, nl=False)


def _graph(spec_or_n, jumps) -> dict:
    n = spec_or_n.n if isinstance(spec_or_n, CirculantSpec) else spec_or_n
    return {"n": n, "jumps": list(jumps)}


def render(fmt: str, graph: dict, results: dict, checks: list, csv_rows=None,
           csv_header=None) -> str:
    """Render ``results`` (an ordered mapping of name -> value or mapping)."""
    if fmt == "json":
        payload = {
            "graph": graph,
            "results": _to_json(results),
            "checks": [c.as_dict() for c in checks],
        }
        return canonical_json(payload)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if csv_rows is None:
            csv_header, csv_rows = ["quantity", "key", "value"], _flatten(results)
        w.writerow(csv_header)
        w.writerows(csv_rows)
        return buf.getvalue()
    rows = _flatten(results)
    if len(rows) == 1:
        return rows[0][2] + "\n"
    lines = []
    for name, key, value in rows:
        lines.append(f"{name}[{key}]: {value}" if key != "" else f"{name}: {value}")
    return "\n".join(lines) + "\n"


def _to_json(obj):
    if isinstance(obj, dict):
        return {str(k): _to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_json(v) for v in obj]
    return _json_value(obj)


def _flatten(results: dict) -> list[list[str]]:
    rows = []
    for name, value in results.items():
        if isinstance(value, dict):
            for k, v in value.items():
                rows.append([name, str(k), _scalar_text(v)])
        else:
            rows.append([name, "", _scalar_text(value)])
    return rows


# -- shared helpers ----------------------------------------------------------

def _resolve_mode(mode: str | None, spec: CirculantSpec, trials: int = 0) -> str:
    if mode == "exact":
        if not has_closed_form(spec):
            raise click.BadParameter(f"no closed form for {spec.label()}; use --mode float")
        if trials:
            raise click.BadParameter("Monte Carlo estimates are floating point; drop --mode exact")
        return "exact"
    if mode == "float":
        return "float"
    return "exact" if has_closed_form(spec) else "float"


def _float_resistance(spec: CirculantSpec, l: int):
    """Spectral resistance, component-aware for split graphs."""
    if l == 0:
        return 0.0
    if spec.is_connected:
        return resistance_spectral(spec, l)
    g = spec.component_count
    if l % g:
        return UNREACHABLE
    m = spec.n // g
    if m == 2:
        return 1.0  # a lone antipodal edge
    sub = build_circulant(m, [s // g for s in spec.jumps])
    return resistance_spectral(sub, l // g)


def _cross_check(rep: VerificationReport, name: str, exact, approx) -> None:
    if exact is UNREACHABLE or approx is UNREACHABLE:
        rep.record(name, exact is approx)
    else:
        rep.add(name, float(exact), float(approx), CROSS_CHECK_RTOL, relative=True)


def _make_spec(n, jumps) -> CirculantSpec:
    if n is None:
        raise click.BadParameter("--n is required")
    return build_circulant(n, jumps)


def _offsets(spec: CirculantSpec, l: int | None) -> list[int]:
    if l is None:
        return list(range(1, spec.n))
    if not 0 <= l < spec.n:
        raise click.BadParameter(f"--l must lie in [0, {spec.n})")
    return [l]


def _fail_if(rep: VerificationReport) -> None:
    if not rep.passed:
        for c in rep.failures():
            click.echo(f"check failed: {c.name} residual={c.residual:.3g}", err=True)
        raise VerificationFailed()


# -- commands ----------------------------------------------------------------

common_graph = [
    click.option("--n", type=int, default=None, help="Vertex count."),
    click.option("--jumps", default="1,2", show_default=True, help="Comma-separated jump set."),
]
common_out = [
    click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default=None),
    click.option("-o", "--output", default=None, help="Write to file instead of stdout."),
]


def _apply(opts):
    def deco(f):
        for o in reversed(opts):
            f = o(f)
        return f
    return deco


@click.group()
@click.version_option(__version__)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="key=value file supplying option defaults.")
@click.pass_context
def cli(ctx, config_path):
    """Effective resistance and random walks on circulant graphs."""
    if config_path:
        values = read_config(config_path)
        ctx.default_map = {name: dict(values) for name in ctx.command.commands}


@cli.command()
@_apply(common_graph)
@click.option("--l", "offset", type=int, default=None, help="Offset; omit for the full profile.")
@click.option("--mode", type=click.Choice(["exact", "float"]), default=None)
@_apply(common_out)
def resist(n, jumps, offset, mode, fmt, output):
    """Two-point resistance between vertex 0 and vertex l."""
    spec = _make_spec(n, parse_jumps(jumps))
    mode = _resolve_mode(mode, spec)
    ls = _offsets(spec, offset)
    rep = VerificationReport()
    values = {}
    for l in ls:
        approx = _float_resistance(spec, l)
        if has_closed_form(spec):
            exact = exact_resistance(spec, l)
            _cross_check(rep, f"exact_vs_spectral[l={l}]", exact, approx)
        values[l] = exact if mode == "exact" else _float_val(approx)
    results = {"resistance": values}
    checks = [] if mode == "exact" else rep.checks
    fmt = fmt or "text"
    if fmt == "csv":
        text = render(fmt, {}, {}, [], [[l, _scalar_text(v)] for l, v in values.items()],
                      ["l", "resistance"])
    elif fmt == "text" and offset is not None:
        text = _scalar_text(values[offset]) + "\n"
    else:
        text = render(fmt, _graph(spec, spec.jumps), {"mode": mode, **results}
                      if fmt == "json" else results, checks)
    _emit(text, output)
    _fail_if(rep)


@cli.command()
@_apply(common_graph)
@click.option("--l", "offset", type=int, default=None, help="Target vertex.")
@click.option("--mfpt", "only_mfpt", is_flag=True, help="Report only the mean first-passage time.")
@click.option("--trials", type=int, default=0, show_default=True, help="Monte Carlo walks (0 = none).")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--mode", type=click.Choice(["exact", "float"]), default=None)
@_apply(common_out)
def walk(n, jumps, offset, only_mfpt, trials, seed, workers, mode, fmt, output):
    """First-passage, commute and mean first-passage times."""
    spec = _make_spec(n, parse_jumps(jumps))
    if trials < 0:
        raise click.BadParameter("--trials must be >= 0")
    if not 0 <= seed < 2**64:
        raise click.BadParameter("--seed must fit in 64 unsigned bits")
    mode = _resolve_mode(mode, spec, trials)
    use_exact = mode == "exact"
    rep = VerificationReport()
    results: dict = {}

    def mfpt_value():
        approx = eigentime_mfpt(spec) if spec.is_connected else UNREACHABLE
        if has_closed_form(spec):
            ex = mfpt_exact(spec)
            _cross_check(rep, "mfpt_exact_vs_eigentime", ex, approx)
            return ex if use_exact else _float_val(approx)
        return approx

    if only_mfpt:
        results["mfpt"] = mfpt_value()
    else:
        if offset is not None and offset == 0:
            raise click.BadParameter("--l must be >= 1 for hitting times")
        fpt, com = {}, {}
        for l in _offsets(spec, offset):
            r = _float_resistance(spec, l)
            approx = UNREACHABLE if r is UNREACHABLE else spec.edge_count * r
            if has_closed_form(spec):
                ex = fpt_exact(spec, l)
                _cross_check(rep, f"fpt_exact_vs_spectral[l={l}]", ex, approx)
                h = ex if use_exact else _float_val(approx)
            else:
                h = approx
            fpt[l] = h
            com[l] = h if h is UNREACHABLE else 2 * h
        if offset is not None:
            results["fpt"], results["commute"] = fpt[offset], com[offset]
        else:
            results["fpt"], results["commute"] = fpt, com
            results["mfpt"] = mfpt_value()
        if trials:
            if offset is None:
                raise click.BadParameter("--trials needs --l")
            if not spec.is_connected:
                raise click.BadParameter(f"{spec.label()} is disconnected; nothing to simulate")
            est = simulate_fpt(spec, offset, trials, seed, workers=workers)
            results.update({"mc_mean": est.mean, "mc_std_error": est.std_error,
                            "mc_trials": est.trials, "mc_seed": est.seed})
    fmt = fmt or "text"
    checks = [] if mode == "exact" else rep.checks
    payload = {"mode": "exact" if use_exact else "float", **results} if fmt == "json" else results
    _emit(render(fmt, _graph(spec, spec.jumps), payload, checks), output)
    _fail_if(rep)


@cli.command()
@_apply(common_graph)
@click.option("--mode", type=click.Choice(["exact", "float"]), default=None)
@_apply(common_out)
def kirchhoff(n, jumps, mode, fmt, output):
    """Kirchhoff index (sum of resistances over all vertex pairs)."""
    spec = _make_spec(n, parse_jumps(jumps))
    mode = _resolve_mode(mode, spec)
    rep = VerificationReport()
    approx = kirchhoff_spectral(spec) if spec.is_connected else UNREACHABLE
    if has_closed_form(spec):
        ex = exact_kirchhoff(spec)
        _cross_check(rep, "kirchhoff_exact_vs_spectral", ex, approx)
        value = ex if mode == "exact" else _float_val(approx)
    else:
        value = approx
    fmt = fmt or "text"
    payload = {"kirchhoff": value}
    if fmt == "json":
        payload["mode"] = mode
    _emit(render(fmt, _graph(spec, spec.jumps), payload, [] if mode == "exact" else rep.checks),
          output)
    _fail_if(rep)


def run_checks(ns: range, jumps: tuple[int, ...], which: list[str]) -> tuple[dict, VerificationReport]:
    """Run the named check families over ``ns``; each family clamps to its own domain."""
    rep = VerificationReport()
    results: dict = {}

    def covered(name, lo, hi=None):
        sel = [N for N in ns if N >= lo and (hi is None or N <= hi)]
        results.setdefault("covered", {})[name] = [sel[0], sel[-1]] if sel else []
        return sel

    if "identities" in which:
        for N in covered("identities", 2):
            rep.extend(identity_suite(N))
    if "trig" in which:
        vals = {}
        for N in covered("trig", 2):
            rep.extend(trig_identity_report(N))
            vals[N] = {
                "inverse_sine_square_sum": inverse_sine_square_sum(N),
                "inverse_sine_square_closed": Fraction(N * N - 1, 3),
                "inverse_cosine_sum": inverse_cosine_sum(N),
                "inverse_cosine_closed": inverse_cosine_sum_fibonacci(N),
            }
        results["trig"] = vals
    if "schwatt" in which:
        for N in covered("schwatt", 2):
            for J in range(1, 3 * N + 1):
                rep.add(f"power_sum[N={N},J={J}]", trig_power_sum_exact(N, J),
                        trig_power_sum_direct(N, J), 1e-9, relative=True)
    if "foster" in which:
        spec_ok = [N for N in ns if N >= 3 and max(jumps) <= N // 2]
        for N in covered("foster", 5) if jumps == (1, 2) else []:
            rep.add(f"foster_exact[N={N}]", N * c12_resistance(N, 1) + N * c12_resistance(N, 2), N - 1)
        for N in spec_ok:
            spec = build_circulant(N, jumps)
            if spec.is_connected:
                rep.extend(foster_audit(spec))
        results.setdefault("covered", {})["foster_solve"] = [spec_ok[0], spec_ok[-1]] if spec_ok else []
    if "equivalence" in which:
        sel = covered("equivalence", 5 if jumps in ((1, 2), (2,)) else 3)
        sel = [N for N in sel if max(jumps) <= N // 2]
        rep.extend(equivalence_sweep(sel, [jumps]))
    if "hitting" in which:
        for N in covered("hitting", 7):
            lhs = 3 * fpt_closed(N, 1) - fpt_closed(N, 2) - fpt_closed(N, 3)
            rep.add(f"hitting_relation[N={N}]", lhs, 4)
    if "recursion" in which:
        for N in covered("recursion", 5):
            R = [c12_resistance(N, l) for l in range(N)]
            ok = all(R[l + 1] == Fraction(l * (N - l), N) + 2 * R[1] - 3 * R[l] - R[l - 1]
                     for l in range(1, N - 1))
            sym = all(R[l] == R[N - l] for l in range(1, N))
            rep.record(f"c12_recursion[N={N}]", ok)
            rep.record(f"c12_symmetry[N={N}]", sym)
            if N % 2:
                Q = [c2_resistance(N, v) for v in range(N)]
                rec = all(Q[l + 1] == Fraction(l * (N - l), N) + Fraction(N * N - 1, 2 * N)
                          - 2 * Q[l] - Q[l - 1] for l in range(1, N - 1))
                rep.record(f"c2_recursion[N={N}]", rec)
    if "c2" in which:
        rep.extend(equivalence_sweep(covered("c2", 5), [(2,)]))
    if "kirchhoff" in which:
        for N in covered("kirchhoff", 5):
            K = c12_kirchhoff(N)
            prof = sum((c12_resistance(N, l) for l in range(1, N)), Fraction(0))
            rep.add(f"kirchhoff_closed_vs_profile[N={N}]", K, Fraction(N, 2) * prof)
            rep.add(f"mfpt_closed_vs_kirchhoff[N={N}]", mfpt_closed(N), Fraction(4, N) * K)
            rep.add(f"mfpt_closed_vs_eigentime[N={N}]", mfpt_closed(N),
                    eigentime_mfpt(build_circulant(N, (1, 2))), 1e-9, relative=True)
    return results, rep


@cli.command()
@click.option("--n-range", "n_range", default="5..40", show_default=True, help="LO..HI inclusive.")
@click.option("--jumps", default="1,2", show_default=True)
@click.option("--check", "checks", multiple=True, type=click.Choice(["all"] + CHECK_NAMES),
              help="Check family to run (repeatable); default all.")
@_apply(common_out)
def verify(n_range, jumps, checks, fmt, output):
    """Run identity, oracle and consistency checks; exit 2 on any failure."""
    ns = parse_range(n_range)
    js = tuple(sorted(parse_jumps(jumps)))
    which = CHECK_NAMES if not checks or "all" in checks else list(checks)
    results, rep = run_checks(ns, js, which)
    results["all_pass"] = rep.passed
    results["check_count"] = len(rep)
    results["worst_residual"] = rep.worst_residual
    graph = {"n": ns.stop - 1, "n_range": [ns.start, ns.stop - 1], "jumps": list(js)}
    fmt = fmt or "json"
    if fmt == "json":
        text = render("json", graph, results, rep.checks)
    else:
        rows = [[c.name, format(c.residual, ".17g"), "pass" if c.passed else "FAIL"]
                for c in rep.checks]
        if fmt == "csv":
            text = render("csv", graph, {}, [], rows, ["name", "residual", "pass"])
        else:
            text = "".join(f"{r[2]:4s} {r[0]} residual={r[1]}\n" for r in rows)
            text += f"{'ALL PASS' if rep.passed else 'FAILED'}: {len(rep)} checks\n"
    _emit(text, output)
    _fail_if(rep)


def sweep_rows(ns: range, jumps: tuple[int, ...]) -> list[list[str]]:
    rows = []
    for N in ns:
        spec = build_circulant(N, jumps)
        exact = has_closed_form(spec)
        kirch = _exact_str(exact_kirchhoff(spec)) if exact else ""
        mf = _exact_str(mfpt_exact(spec)) if exact else ""
        for l in range(1, N):
            rf = _float_resistance(spec, l)
            rows.append([
                str(N), str(l),
                _exact_str(exact_resistance(spec, l)) if exact else "",
                "unreachable" if rf is UNREACHABLE else format(rf, ".17g"),
                _exact_str(fpt_exact(spec, l)) if exact else "",
                kirch, mf,
            ])
    return rows


@cli.command()
@click.option("--n-range", "n_range", default="5..20", show_default=True)
@click.option("--jumps", default="1,2", show_default=True)
@_apply(common_out)
def sweep(n_range, jumps, fmt, output):
    """Plot-ready table of per-(N, l) resistances and walk statistics."""
    ns = parse_range(n_range)
    js = tuple(sorted(parse_jumps(jumps)))
    for N in ns:
        build_circulant(N, js)
    rows = sweep_rows(ns, js)
    fmt = fmt or "csv"
    if fmt == "json":
        table = [dict(zip(CSV_HEADER, r)) for r in rows]
        text = render("json", {"n": ns.stop - 1, "n_range": [ns.start, ns.stop - 1],
                               "jumps": list(js)}, {"rows": table}, [])
    elif fmt == "csv":
        text = render("csv", {}, {}, [], rows, CSV_HEADER)
    else:
        text = "".join(" ".join(r) + "\n" for r in [CSV_HEADER] + rows)
    _emit(text, output)


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="circres", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except VerificationFailed:
        return 2
    except (CirculantError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
