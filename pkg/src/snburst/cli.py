"""Command-line interface: layout, metrics, bench, curve and generate commands.

Exit codes: 0 success, 1 usage error, 2 IO/parse error, 3 numeric failure.
The default output directory can be set via the SNBURST_OUT_DIR
environment variable.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import bench as bench_mod
from .fr import FrParams, fr_run
from .graphs import (
    GENERATORS,
    GraphError,
    ParseError,
    gen_heawood,
    gen_queen,
    gen_scale_free,
    gen_wagner,
    write_edge_list,
    write_graphml,
)
from .layout import DegenerateLayoutError, NumericError
from .metrics import compute_metrics
from .render import (
    layout_to_csv,
    layout_to_svg,
    magnitude_curve_to_csv,
    read_layout_csv,
)
from .snb import (
    DegenerateGraphError,
    SnbParams,
    compute_sync_param,
    snb_run,
    total_magnitude_curve,
)

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NUMERIC = 3


@click.group()
def cli():
    """Sync-and-Burst graph layout toolkit."""


def _out_dir(value: str | None) -> Path:
    if value:
        return Path(value)
    import os

    return Path(os.environ.get("SNBURST_OUT_DIR", "."))


def _load_graph(path: str):
    return bench_mod.load_graph_file(Path(path))


@cli.command("layout")
@click.argument("graph_file", type=click.Path())
@click.option("--alg", type=click.Choice(["snb", "fr"]), default="snb", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--multiplier", type=int, default=20, show_default=True,
              help="Iterations per vertex.")
@click.option("--sync-param", type=float, default=None,
              help="Override s (default: derived from betweenness stdev).")
@click.option("--out-dir", type=click.Path(), default=None)
@click.option("--labels", is_flag=True, help="Draw vertex labels in the SVG.")
def cmd_layout(graph_file, alg, seed, multiplier, sync_param, out_dir, labels):
    """Lay out GRAPH_FILE and write <stem>_<alg>.svg plus a coordinates CSV."""
    g = _load_graph(graph_file)
    if alg == "snb":
        s = sync_param if sync_param is not None else compute_sync_param(g)
        record = snb_run(g, SnbParams(sync_param=s, seed=seed, total_multiplier=multiplier))
    else:
        record = fr_run(g, FrParams(seed=seed), total_multiplier=multiplier)
    out = _out_dir(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(graph_file).stem
    svg_path = out / f"{stem}_{alg}.svg"
    csv_path = out / f"{stem}_{alg}.csv"
    svg_path.write_text(layout_to_svg(g, record.final_layout, labels=labels))
    csv_path.write_text(layout_to_csv(record.final_layout))
    click.echo(f"wrote {svg_path} and {csv_path}")


@cli.command("metrics")
@click.argument("graph_file", type=click.Path())
@click.argument("layout_csv", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None,
              help="Write to a file instead of stdout.")
def cmd_metrics(graph_file, layout_csv, fmt, output):
    """Compute the aesthetic scorecard of LAYOUT_CSV for GRAPH_FILE."""
    g = _load_graph(graph_file)
    layout = read_layout_csv(Path(layout_csv).read_text(encoding="utf-8"))
    if len(layout) != g.n:
        raise ParseError(
            f"layout has {len(layout)} vertices but the graph has {g.n}"
        )
    report = compute_metrics(g, layout)
    if fmt == "json":
        text = json.dumps(report.to_json_dict(), indent=2) + "\n"
    else:
        row = report.scalar_row()
        header = ",".join(row)
        values = ",".join("" if v is None else repr(v) if isinstance(v, float) else str(v)
                          for v in row.values())
        text = f"{header}\n{values}\n"
    if output:
        Path(output).write_text(text)
        click.echo(f"wrote {output}")
    else:
        click.echo(text, nl=False)


@cli.command("bench")
@click.argument("corpus_dir", type=click.Path())
@click.option("--alg", "algorithms", multiple=True, type=click.Choice(["snb", "fr"]),
              default=("snb", "fr"), show_default=True)
@click.option("--seeds", type=int, default=1, show_default=True,
              help="Seeds per graph.")
@click.option("--multiplier", type=int, default=20, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True,
              help="Worker threads; keep 1 for clean timing.")
@click.option("--out-dir", type=click.Path(), default=None)
def cmd_bench(corpus_dir, algorithms, seeds, multiplier, workers, out_dir):
    """Run the corpus in CORPUS_DIR and write records.csv and buckets.csv."""
    records = bench_mod.run_corpus(
        corpus_dir,
        algorithms=tuple(dict.fromkeys(algorithms)),
        seeds_per_graph=seeds,
        total_multiplier=multiplier,
        workers=workers,
    )
    buckets = bench_mod.bucketize(records)
    out = _out_dir(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "records.csv").write_text(bench_mod.records_to_csv(records))
    (out / "buckets.csv").write_text(bench_mod.buckets_to_csv(buckets))
    click.echo(f"wrote {out / 'records.csv'} ({len(records)} records) and "
               f"{out / 'buckets.csv'} ({len(buckets)} rows)")


@cli.command("curve")
@click.argument("graph_file", type=click.Path())
@click.option("--t-max", type=int, default=None,
              help="Last iteration (default: 20n).")
@click.option("--sync-param", type=float, default=None)
@click.option("-o", "--output", type=click.Path(), default=None)
def cmd_curve(graph_file, t_max, sync_param, output):
    """Emit the total-magnitude curve CSV (t, Ma, Mr, f) for GRAPH_FILE."""
    g = _load_graph(graph_file)
    s = sync_param if sync_param is not None else compute_sync_param(g)
    params = SnbParams(sync_param=s)
    if t_max is None:
        t_max = params.total_multiplier * g.n
    rows = total_magnitude_curve(g, params, t_max)
    text = magnitude_curve_to_csv(rows)
    if output:
        Path(output).write_text(text)
        click.echo(f"wrote {output}")
    else:
        click.echo(text, nl=False)


@cli.command("generate")
@click.argument("name")
@click.argument("params", nargs=-1, type=int)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--target-m", type=int, default=None,
              help="Scale-free only: add extra edges up to this edge count.")
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graphml"]),
              default="edgelist", show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None)
def cmd_generate(name, params, seed, target_m, fmt, output):
    """Generate a named graph: queen R C | wagner | heawood | scale-free N [K]."""
    if name not in GENERATORS:
        raise click.UsageError(
            f"unknown generator {name!r}; available: {', '.join(sorted(GENERATORS))}"
        )
    if name == "queen":
        if len(params) != 2:
            raise click.UsageError("queen takes two parameters: rows cols")
        g = gen_queen(*params)
    elif name == "wagner":
        g = gen_wagner()
    elif name == "heawood":
        g = gen_heawood()
    else:
        if len(params) not in (1, 2):
            raise click.UsageError("scale-free takes: n [edges_per_step]")
        n = params[0]
        k = params[1] if len(params) == 2 else 1
        g = gen_scale_free(n, k, seed=seed, target_m=target_m)
    text = write_edge_list(g) if fmt == "edgelist" else write_graphml(g)
    if output is None:
        suffix = ".txt" if fmt == "edgelist" else ".graphml"
        output = f"{name}{'_' + '_'.join(map(str, params)) if params else ''}{suffix}"
    Path(output).write_text(text)
    click.echo(f"wrote {output} (n={g.n}, m={g.m})")


def main(argv=None) -> int:
    """Dispatch with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except (ParseError, GraphError, OSError, ValueError) as exc:
        if isinstance(exc, (DegenerateGraphError, DegenerateLayoutError, NumericError)):
            click.echo(f"numeric error: {exc}", err=True)
            return EXIT_NUMERIC
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO
    except NumericError as exc:
        click.echo(f"numeric error: {exc}", err=True)
        return EXIT_NUMERIC
    return 0


def entrypoint():  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
