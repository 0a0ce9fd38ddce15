"""Run configuration, suite dispatch, and delimited output.

JSON output is byte-stable: keys sorted, no timestamps, trailing newline.
Wall-clock timings change between runs, so they only appear when asked
for.  CSV uses the fixed homology column set for slice tables and a
check/passed/detail triple for suite rows.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from dataclasses import dataclass, replace
from time import perf_counter

from . import __version__
from .catalog import StructureId, WEIGHT_ZERO_PART
from .homology import HOMOLOGY_FILTERS, balanced_kernel_table
from .suites import SUITE_NAMES, run_suite

HOMOLOGY_COLUMNS = (
    "structure",
    "n",
    "form_degree",
    "m",
    "l",
    "weight",
    "dim",
    "rank_in",
    "rank_out",
    "homology_dim",
)

CHECK_COLUMNS = ("check", "passed", "detail")


@dataclass(frozen=True)
class RunConfig:
    structure: str = "DrinfeldSklyanin"
    n: int = 2
    weight_cutoff: int = 6
    p_max: int = 3
    q_max: int = 3
    suites: tuple = SUITE_NAMES
    output_path: str = None
    format: str = "json"
    jobs: int = 1
    timing: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.format not in ("json", "csv"):
            raise ValueError("format must be json or csv, got %r" % (self.format,))
        if self.n < 2:
            raise ValueError("structures need n >= 2")
        unknown = [s for s in self.suites if s not in SUITE_NAMES]
        if unknown:
            raise ValueError("unknown suites %s" % (unknown,))
        StructureId.parse(self.structure)


def suite_applies(name, structure):
    """Whether a suite is defined for the given structure id."""
    sid = StructureId.parse(structure)
    if name in ("homology", "spectral"):
        return sid.kind in WEIGHT_ZERO_PART and sid.kind in HOMOLOGY_FILTERS
    if name == "harmonic":
        part = WEIGHT_ZERO_PART.get(sid.kind)
        return part is not None and not HOMOLOGY_FILTERS[part]
    return True


def _suite_task(args):
    name, structure, n, weight_cutoff, p_max, q_max, seed = args
    t0 = perf_counter()
    rows = run_suite(
        name,
        structure,
        n,
        weight_cutoff=weight_cutoff,
        p_max=p_max,
        q_max=q_max,
        seed=seed,
    )
    return name, rows, perf_counter() - t0


def run_report(config):
    """Execute the configured suites and assemble the report dict."""
    tasks = []
    skipped = []
    for name in config.suites:
        if suite_applies(name, config.structure):
            tasks.append(
                (
                    name,
                    config.structure,
                    config.n,
                    config.weight_cutoff,
                    config.p_max,
                    config.q_max,
                    config.seed,
                )
            )
        else:
            skipped.append(name)
    if config.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(min(config.jobs, len(tasks))) as pool:
            results = pool.map(_suite_task, tasks)
    else:
        results = [_suite_task(t) for t in tasks]

    suites = {}
    timing = {}
    passed = True
    for name, rows, seconds in results:
        ok = all(r["passed"] for r in rows)
        passed = passed and ok
        suites[name] = {"rows": rows, "passed": ok}
        timing[name] = round(seconds, 3)
    report = {
        "version": __version__,
        "config": {
            "structure": config.structure,
            "n": config.n,
            "weight_cutoff": config.weight_cutoff,
            "p_max": config.p_max,
            "q_max": config.q_max,
            "suites": list(config.suites),
            "format": config.format,
            "seed": config.seed,
        },
        "skipped_suites": skipped,
        "suites": suites,
        "passed": passed,
    }
    if config.timing:
        report["timing_seconds"] = timing
    return report


def render_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, tuple):
        return " ".join(str(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_homology_csv(table):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HOMOLOGY_COLUMNS)
    for r in table.rows:
        writer.writerow([_cell(getattr(r, col)) for col in HOMOLOGY_COLUMNS])
    return buf.getvalue()


def render_check_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CHECK_COLUMNS)
    for r in rows:
        writer.writerow([_cell(r[col]) for col in CHECK_COLUMNS])
    return buf.getvalue()


def render_report_csv(report):
    """Flatten a suite report into suite-prefixed check rows."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("suite",) + CHECK_COLUMNS)
    for name in sorted(report["suites"]):
        for r in report["suites"][name]["rows"]:
            writer.writerow([name] + [_cell(r[col]) for col in CHECK_COLUMNS])
    return buf.getvalue()


def homology_report(structure, n, weight_cutoff):
    return balanced_kernel_table(structure, n, weight_cutoff)


def with_overrides(config, **kwargs):
    return replace(config, **kwargs)
