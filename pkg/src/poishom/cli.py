"""Command line front end.

One verb per activity: ``catalog`` lists the named structures, ``check``
runs verification suites, ``homology`` and ``spectral`` print tables,
``report`` runs the suites and writes the delimited output plus summary
figures into a directory.

Exit codes: 0 all requested checks passed, 1 some check failed, 2 bad
usage or configuration, 3 a form left its declared grading slice.
The POISHOM_OUT_DIR environment variable supplies the base directory
for relative or missing output paths.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from pathlib import Path

from . import __version__
from .catalog import KINDS, StructureId, build_structure, weight_split
from .report import (
    RunConfig,
    homology_report,
    render_check_csv,
    render_homology_csv,
    render_json,
    render_report_csv,
    run_report,
    suite_applies,
)
from .slices import GradingViolation
from .spectral import convergence_check
from .suites import SUITE_NAMES


def build_parser():
    parser = argparse.ArgumentParser(
        prog="poishom",
        description="Exact Poisson homology calculator for r-matrix type brackets.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, structure=True):
        if structure:
            p.add_argument(
                "--structure",
                default="DrinfeldSklyanin",
                help="structure id, e.g. DrinfeldSklyanin or Pencil(2,3)",
            )
        p.add_argument("--n", type=int, default=2, help="number of variable pairs")
        p.add_argument("--weight-cutoff", type=int, default=6)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output file or directory")

    p = sub.add_parser("catalog", help="list the named structures")
    p.add_argument("--n", type=int, default=2)

    p = sub.add_parser("check", help="run verification suites")
    common(p)
    p.add_argument(
        "--suite",
        action="append",
        choices=SUITE_NAMES,
        help="suite to run (repeatable; default: all that apply)",
    )
    p.add_argument("--p-max", type=int, default=3)
    p.add_argument("--q-max", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")

    p = sub.add_parser("homology", help="per-slice homology table")
    common(p)

    p = sub.add_parser("spectral", help="first-page convergence table")
    common(p)

    p = sub.add_parser("report", help="run suites, write delimited output and figures")
    common(p)
    p.add_argument("--suite", action="append", choices=SUITE_NAMES)
    p.add_argument("--p-max", type=int, default=3)
    p.add_argument("--q-max", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true")

    return parser


def _resolve(path, default_name=None):
    """Apply the output-directory environment default to a path."""
    base = os.environ.get("POISHOM_OUT_DIR")
    if path is None:
        if default_name is None:
            return None
        path = default_name
    p = Path(path)
    if not p.is_absolute() and base:
        p = Path(base) / p
    return p


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def _cmd_catalog(args):
    for kind in KINDS:
        name = "Pencil(1,1)" if kind == "Pencil" else kind
        sid = StructureId.parse(name)
        pi = build_structure(sid, args.n)
        weights = sorted(weight_split(pi))
        terms = sum(len(p.terms) for p in pi.terms.values())
        label = "Pencil(a,b)" if kind == "Pencil" else kind
        print(
            "%-18s ambient=%-9s terms=%-3d weights=%s"
            % (label, sid.varset_kind, terms, weights)
        )
    return 0


def _config_from_args(args, suites):
    return RunConfig(
        structure=args.structure,
        n=args.n,
        weight_cutoff=args.weight_cutoff,
        p_max=args.p_max,
        q_max=args.q_max,
        suites=tuple(suites),
        output_path=args.out,
        format=args.format,
        jobs=args.jobs,
        timing=args.timing,
        seed=args.seed,
    )


def _selected_suites(args):
    if args.suite:
        bad = [s for s in args.suite if not suite_applies(s, args.structure)]
        if bad:
            raise ValueError(
                "suite(s) %s not defined for %s" % (", ".join(bad), args.structure)
            )
        return tuple(dict.fromkeys(args.suite))
    return tuple(s for s in SUITE_NAMES if suite_applies(s, args.structure))


def _cmd_check(args):
    config = _config_from_args(args, _selected_suites(args))
    report = run_report(config)
    for name in config.suites:
        info = report["suites"][name]
        total = len(info["rows"])
        good = sum(1 for r in info["rows"] if r["passed"])
        print(
            "%-13s %s (%d/%d rows)"
            % (name, "PASS" if info["passed"] else "FAIL", good, total)
        )
        if not info["passed"]:
            for r in info["rows"]:
                if not r["passed"]:
                    print("    %s: %s" % (r["check"], r["detail"]))
    out = _resolve(args.out)
    if out is not None:
        if args.format == "json":
            _emit(render_json(report), out)
        else:
            _emit(render_report_csv(report), out)
    return 0 if report["passed"] else 1


def _cmd_homology(args):
    table = homology_report(args.structure, args.n, args.weight_cutoff)
    if args.format == "csv":
        text = render_homology_csv(table)
    else:
        text = render_json(
            {
                "structure": args.structure,
                "n": args.n,
                "weight_cutoff": args.weight_cutoff,
                "rows": [dataclasses.asdict(r) for r in table.rows],
            }
        )
    _emit(text, _resolve(args.out))
    return 0


def _cmd_spectral(args):
    conv = convergence_check(args.structure, args.n, args.weight_cutoff)
    if args.format == "csv":
        import csv as _csv
        import io

        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ("weight", "form_degree", "truncation_increment", "first_page_dim", "match")
        )
        for r in conv["rows"]:
            writer.writerow(
                (
                    r["weight"],
                    r["form_degree"],
                    r["truncation_increment"],
                    r["first_page_dim"],
                    "true" if r["match"] else "false",
                )
            )
        text = buf.getvalue()
    else:
        text = render_json(conv)
    _emit(text, _resolve(args.out))
    return 0 if conv["passed"] else 1


def _cmd_report(args):
    from .viz import save_check_summary, save_convergence_plot, save_homology_heatmap

    config = _config_from_args(args, _selected_suites(args))
    report = run_report(config)

    out_dir = _resolve(args.out, default_name=".")
    out_dir.mkdir(parents=True, exist_ok=True)
    if config.format == "json":
        _emit(render_json(report), out_dir / "report.json")
    else:
        _emit(render_report_csv(report), out_dir / "report.csv")
    figures = [save_check_summary(report, out_dir / "check_summary.png")]
    if suite_applies("homology", config.structure):
        table = homology_report(config.structure, config.n, config.weight_cutoff)
        figures.append(
            save_homology_heatmap(
                table,
                out_dir / "homology_heatmap.png",
                title="%s n=%d" % (config.structure, config.n),
            )
        )
    if suite_applies("spectral", config.structure):
        conv = convergence_check(config.structure, config.n, config.weight_cutoff)
        figures.append(save_convergence_plot(conv, out_dir / "convergence.png"))
    print("report written to %s" % out_dir)
    for f in figures:
        print("figure: %s" % f)
    return 0 if report["passed"] else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "catalog": _cmd_catalog,
        "check": _cmd_check,
        "homology": _cmd_homology,
        "spectral": _cmd_spectral,
        "report": _cmd_report,
    }
    try:
        return handlers[args.command](args)
    except GradingViolation as exc:
        print("grading violation: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print("identity failure: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
