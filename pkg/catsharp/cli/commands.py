"""The ``catsharp`` command line.

Every command reads an optional spec file, needs a degree bound (``--bound``
or the spec file's ``bound``), writes its primary output to stdout (or
``--output``) and a one-line summary per task to stderr. Exit codes: 0 when
everything passed, 1 on a law failure, 2 on an input error.
"""
import argparse
import logging
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from ..algem import (
    check_monad_morphism,
    check_smc_decomposition,
    check_wreath,
    induced_algebra_functor,
    wreath_composite,
)
from ..coclosure import coclosure
from ..comod import compose_bicomodules
from ..fincat import check_category, check_copresheaf
from ..monad import check_algebra, check_monad, compare_monads
from ..theory import compare_with_oracle, kleisli_oracle, nerve, segal_check, theory_category
from ..utils import (
    EXACT,
    BoundExhausted,
    CatsharpError,
    Exactness,
    LawViolation,
    Report,
    RunConfig,
    SpecError,
    label,
    meet_all,
    save_run_report,
)
from . import export
from .spec_file import SpecFile, load_spec, parse_operations

logger = logging.getLogger(__name__)

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

#: violations listed per failed task
_SHOWN = 10


@dataclass
class TaskRecord:
    name: str
    status: str = "pass"
    exactness: Exactness = EXACT
    report: Optional[Report] = None
    detail: str = ""
    seconds: float = 0.0
    outputs: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.status == "pass"

    def finish(self, report):
        self.report = report
        self.exactness = self.exactness.meet(report.exactness)
        if not report.ok:
            self.status = "FAIL"
            self.detail = ",".join(report.laws_violated())
        return report

    def line(self):
        detail = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {self.status}{detail} [{self.exactness}] {self.seconds:.2f}s"

    def to_dict(self):
        return {
            "task": self.name,
            "status": self.status,
            "exactness": str(self.exactness),
            "seconds": self.seconds,
            "detail": self.detail,
            "outputs": self.outputs,
            "report": None if self.report is None else self.report.to_dict(),
        }


class RunReport:
    """Per-task status, exactness, law reports and timing of one command."""

    def __init__(self, command, config):
        self.command = command
        self.config = config
        self.tasks = []

    @contextmanager
    def task(self, name, tolerate=False):
        """Time a task; with ``tolerate`` a LawViolation marks it failed
        instead of ending the run."""
        record = TaskRecord(name)
        start = time.perf_counter()
        try:
            yield record
        except LawViolation as e:
            record.status, record.detail = "FAIL", str(e)
            if e.report is not None:
                record.report = e.report
            if not tolerate:
                raise
        except Exception:
            record.status = "error"
            raise
        finally:
            record.seconds = time.perf_counter() - start
            self.tasks.append(record)
            print(record.line(), file=sys.stderr)

    @property
    def ok(self):
        return all(t.ok for t in self.tasks)

    def to_dict(self):
        return {
            "command": self.command,
            "bound": self.config.bound,
            "ok": self.ok,
            "tasks": [t.to_dict() for t in self.tasks],
        }

    def close(self):
        if self.config.report_path:
            save_run_report(self.config.report_path, self.to_dict())
            logger.info("run report written to %s", self.config.report_path)
        return 0 if self.ok else 1


def _load(args):
    if getattr(args, "spec", None):
        return load_spec(args.spec)
    return SpecFile()


def _config(args, spec):
    bound = args.bound if args.bound is not None else spec.bound
    if bound is None:
        raise SpecError("a degree bound is required: pass --bound or set 'bound' in the spec file")
    settings = RunConfig(
        output_format=args.format,
        oracle=getattr(args, "oracle", False),
        segal=getattr(args, "segal", False),
        verbose=args.verbose,
        report_path=args.report,
    )
    return {"bound": bound} >> settings


def _emit(args, text):
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
        print(f"written: {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _objects(m, args, bound):
    if args.objects:
        return parse_operations(m, args.objects, bound)
    return tuple(m.carrier.operations(bound))


def _violation_lines(report, limit=_SHOWN):
    found = report.all_violations()
    lines = [f"  {v}" for v in found[:limit]]
    if len(found) > limit:
        lines.append(f"  ... {len(found) - limit} more")
    return lines


def _report_text(run):
    rows = [(t.name, (t.status, str(t.exactness), t.detail)) for t in run.tasks]
    text = export.format_table(export.sizes_table(rows, ["status", "exactness", "laws"], index="task"))
    for t in run.tasks:
        if t.report is not None and not t.report.ok:
            text += f"{t.name}:\n" + "".join(line + "\n" for line in _violation_lines(t.report))
    return text


def _failed_objects(report, objects):
    names = {label(I) for I in objects}
    failed = set()
    for v in report.all_violations():
        where = v.where[0] if isinstance(v.where, tuple) and v.where else v.where
        if where in names:
            failed.add(where)
    return failed


def cmd_check(args: argparse.Namespace) -> int:
    """All law checks of every declared structure."""
    spec = _load(args)
    config = _config(args, spec)
    if not any(spec.names(s) for s in ("categories", "copresheaves", "monads", "algebras", "morphisms",
                                        "wreaths")):
        raise SpecError("check needs a spec file declaring something to check")
    bound = config.bound
    run = RunReport("check", config)
    for name in spec.names("categories"):
        with run.task(f"category {name}", tolerate=True) as t:
            t.finish(check_category(spec.category(name), progress=False))
    for name in spec.names("copresheaves"):
        with run.task(f"copresheaf {name}", tolerate=True) as t:
            t.finish(check_copresheaf(spec.copresheaf(name)))
    for name in spec.names("monads"):
        with run.task(f"monad {name}", tolerate=True) as t:
            t.finish(check_monad(spec.monad(name), bound))
    for name in spec.names("algebras"):
        with run.task(f"algebra {name}", tolerate=True) as t:
            t.finish(check_algebra(spec.algebra(name, bound), bound))
    for name in spec.names("morphisms"):
        with run.task(f"morphism {name}", tolerate=True) as t:
            t.finish(check_monad_morphism(spec.morphism(name), bound))
    for name in spec.names("wreaths"):
        with run.task(f"wreath {name}", tolerate=True) as t:
            t.finish(check_wreath(spec.wreath(name), bound))
    _emit(args, _report_text(run))
    return run.close()


def cmd_theory(args: argparse.Namespace) -> int:
    spec = _load(args)
    config = _config(args, spec)
    bound = config.bound
    m = spec.monad(args.monad)
    objects = _objects(m, args, bound)
    run = RunReport("theory", config)
    with run.task(f"theory {m.name}") as t:
        theory = theory_category(m, objects, bound, strict=not args.partial)
        t.exactness = meet_all(theory.exactness.values())
        counts = theory.hom_counts()
        t.outputs["objects"] = [label(I) for I in theory.objects]
        t.outputs["hom_counts"] = counts
    lines = []
    if config.oracle:
        if theory.is_partial:
            raise BoundExhausted(f"{theory.name} is partial at bound {bound}; the oracle needs a complete "
                                 f"theory", bound=bound)
        with run.task(f"oracle {m.name}") as t:
            oracle = kleisli_oracle(m, theory.objects, bound)
            report = t.finish(compare_with_oracle(theory, oracle))
        if report.ok:
            lines.append(f"oracle: isomorphic ({len(oracle.morphisms)} morphisms)")
        else:
            lines.append("oracle: MISMATCH (" + ",".join(report.laws_violated()) + ")")
            lines.extend(_violation_lines(report))
    if args.plot:
        export.plot_hom_counts(counts, theory.objects, args.plot, title=theory.name)
    if config.output_format == "table":
        truncated = sorted(f"{label(I)}->{label(J)}" for (I, J), e in theory.exactness.items() if not e.exact)
        text = export.format_table(export.hom_table(counts, theory.objects))
        text += f"exactness: {meet_all(theory.exactness.values())}"
        text += f" ({', '.join(truncated)} truncated)\n" if truncated else "\n"
        text += "".join(line + "\n" for line in lines)
        _emit(args, text)
    else:
        for line in lines:
            print(line, file=sys.stderr)
        C = theory.category()
        if config.output_format == "native":
            _emit(args, export.to_yaml(export.native_category(C)))
        else:
            _emit(args, export.to_graphml(export.category_graph(C)))
    return run.close()


def _nerve_run(args, command, segal):
    spec = _load(args)
    config = _config(args, spec)
    bound = config.bound
    m = spec.monad(args.monad)
    A = spec.algebra(args.algebra, bound)
    objects = _objects(m, args, bound)
    run = RunReport(command, config)
    with run.task(f"nerve {A.name}") as t:
        N = nerve(m, A, objects, bound)
        t.exactness = meet_all(N.theory.exactness.values())
        t.outputs["cells"] = {label(I): n for I, n in N.sizes().items()}
    report = None
    if segal:
        with run.task(f"segal {A.name}") as t:
            report = t.finish(segal_check(N, bound))
    return spec, config, run, N, report


def _nerve_text(N, report, with_cells=True):
    objects = N.theory.objects
    failed = set() if report is None else _failed_objects(report, objects)
    rows, columns = [], []
    for I in objects:
        values = []
        if with_cells:
            values.append(len(N.cells(I)))
        if report is not None:
            values.append("FAIL" if label(I) in failed else "pass")
        rows.append((I, tuple(values)))
    columns = (["cells"] if with_cells else []) + (["segal"] if report is not None else [])
    text = export.format_table(export.sizes_table(rows, columns, index="object"))
    if report is not None:
        if report.ok:
            text += "segal: PASS\n"
        else:
            text += "segal: FAIL (" + ",".join(report.laws_violated()) + ")\n"
            text += "".join(line + "\n" for line in _violation_lines(report))
    return text


def cmd_nerve(args: argparse.Namespace) -> int:
    _, config, run, N, report = _nerve_run(args, "nerve", args.segal)
    if config.output_format == "table":
        _emit(args, _nerve_text(N, report))
    elif config.output_format == "native":
        _emit(args, export.to_yaml(export.native_copresheaf(N.data, name=N.name)))
    else:
        _emit(args, export.to_graphml(export.copresheaf_graph(N.data)))
    return run.close()


def cmd_segal(args: argparse.Namespace) -> int:
    _, _, run, N, report = _nerve_run(args, "segal", True)
    _emit(args, _nerve_text(N, report, with_cells=False))
    return run.close()


def _table_only(config, command):
    if config.output_format != "table":
        raise SpecError(f"{command} only writes tables")


def _arity_rows(r, bound):
    objects = r.right.category.objects
    rows = []
    for I in r.operations(bound):
        sizes = r.arity(I).sizes()
        rows.append((I, (label(r.output(I)), r.degree(I)) + tuple(sizes[a] for a in objects)))
    return rows, ["output", "degree"] + [f"|{label(a)}|" for a in objects]


def cmd_compose(args: argparse.Namespace) -> int:
    spec = _load(args)
    config = _config(args, spec)
    _table_only(config, "compose")
    p, q = spec.bicomodule(args.left), spec.bicomodule(args.right)
    run = RunReport("compose", config)
    with run.task(f"compose {p.name}◁{q.name}") as t:
        r = compose_bicomodules(p, q, config.bound)
        t.exactness = r.exactness_at(config.bound)
        rows, columns = _arity_rows(r, config.bound)
        t.outputs["operations"] = len(rows)
    text = export.format_table(export.sizes_table(rows, columns))
    _emit(args, text + f"exactness: {t.exactness}\n")
    return run.close()


def cmd_coclosure(args: argparse.Namespace) -> int:
    spec = _load(args)
    config = _config(args, spec)
    _table_only(config, "coclosure")
    p, q = spec.bicomodule(args.left), spec.bicomodule(args.right)
    run = RunReport("coclosure", config)
    with run.task(f"coclosure [{p.name},{q.name}]") as t:
        cc = coclosure(p, q, config.bound)
        t.exactness = cc.exactness_at(config.bound)
        rows, columns = _arity_rows(cc, config.bound)
        t.outputs["operations"] = len(rows)
    text = export.format_table(export.sizes_table(rows, columns))
    _emit(args, text + f"exactness: {t.exactness}\n")
    return run.close()


def cmd_free(args: argparse.Namespace) -> int:
    spec = _load(args)
    config = _config(args, spec)
    m, X = spec.monad(args.monad), spec.copresheaf(args.copresheaf)
    run = RunReport("free", config)
    with run.task(f"free {m.name}({X.name})") as t:
        Y = m.apply(X, config.bound)
        t.exactness = Y.exactness
        t.outputs["sizes"] = {label(a): n for a, n in Y.sizes().items()}
    if config.output_format == "table":
        rows = [(a, (n,)) for a, n in Y.sizes().items()]
        text = export.format_table(export.sizes_table(rows, ["elements"], index="object"))
        _emit(args, text + f"exactness: {Y.exactness}\n")
    elif config.output_format == "native":
        _emit(args, export.to_yaml(export.native_copresheaf(Y)))
    else:
        _emit(args, export.to_graphml(export.copresheaf_graph(Y)))
    return run.close()


def cmd_em_check(args: argparse.Namespace) -> int:
    """Laws of a monad morphism, and optionally the algebra it induces."""
    spec = _load(args)
    config = _config(args, spec)
    _table_only(config, "em-check")
    bound = config.bound
    phi = spec.morphism(args.morphism)
    run = RunReport("em-check", config)
    with run.task(f"morphism {phi.name}", tolerate=True) as t:
        t.finish(check_monad_morphism(phi, bound))
    if args.algebra:
        A = spec.algebra(args.algebra, bound)
        with run.task(f"induced {phi.name}({A.name})", tolerate=True) as t:
            Y = induced_algebra_functor(phi, A, bound)
            t.finish(check_algebra(Y, bound))
            t.outputs["sizes"] = {label(a): n for a, n in Y.carrier.sizes().items()}
    _emit(args, _report_text(run))
    return run.close()


def cmd_wreath(args: argparse.Namespace) -> int:
    spec = _load(args)
    config = _config(args, spec)
    _table_only(config, "wreath")
    bound = config.bound
    w = spec.wreath(args.wreath)
    run = RunReport("wreath", config)
    with run.task(f"wreath {w.name}", tolerate=True) as t:
        t.finish(check_wreath(w, bound))
    lines = []
    if args.compare:
        target = spec.monad(args.compare)
        with run.task(f"compare {w.name}◁{w.monad.name} {target.name}") as t:
            gamma = compare_monads(wreath_composite(w), target, bound, limit=args.limit)
            report = Report(f"{w.name}◁{w.monad.name} ≅ {target.name}", bound=bound)
            report.expect(gamma is not None, "isomorphism", target.name)
            t.finish(report)
        lines.append(f"compare-monads: {'PASS' if report.ok else 'FAIL'}")
    elif w.name == "sm":
        with run.task("compare sm◁path smc", tolerate=True) as t:
            report = t.finish(check_smc_decomposition(bound, w))
        lines.append(f"compare-monads: {'PASS' if report.ok else 'FAIL'}")
        if not report.ok:
            lines.extend(_violation_lines(report))
    _emit(args, _report_text(run) + "".join(line + "\n" for line in lines))
    return run.close()


def cmd_compare_monads(args: argparse.Namespace) -> int:
    spec = _load(args)
    config = _config(args, spec)
    m1, m2 = (spec.monad(name) for name in args.monads)
    run = RunReport("compare-monads", config)
    with run.task(f"compare {m1.name} {m2.name}") as t:
        gamma = compare_monads(m1, m2, config.bound, limit=args.limit)
        report = Report(f"{m1.name} ≅ {m2.name}", bound=config.bound)
        report.expect(gamma is not None, "isomorphism", f"{m1.name}, {m2.name}",
                      f"no isomorphism among the first {args.limit} carrier isomorphisms")
        t.finish(report)
    if gamma is not None:
        t.outputs["operations"] = {label(I): label(gamma(I)) for I in m1.carrier.operations(config.bound)}
    _emit(args, f"compare-monads: {'PASS' if report.ok else 'FAIL'}\n")
    return run.close()


def cmd_export(args: argparse.Namespace) -> int:
    spec = _load(args)
    config = _config(args, spec)
    run = RunReport("export", config)
    fmt = config.output_format
    if args.copresheaf:
        with run.task(f"export {args.copresheaf}") as t:
            X = spec.copresheaf(args.copresheaf)
            t.finish(check_copresheaf(X))
        if fmt == "native":
            text = export.to_yaml(export.native_copresheaf(X, name=args.copresheaf))
        elif fmt == "graph":
            text = export.to_graphml(export.copresheaf_graph(X))
        else:
            rows = [(a, (n,)) for a, n in X.sizes().items()]
            text = export.format_table(export.sizes_table(rows, ["elements"], index="object"))
    else:
        with run.task(f"export {args.category or args.theory}") as t:
            if args.category:
                C = spec.category(args.category)
                name = args.category
            else:
                m = spec.monad(args.theory)
                C = theory_category(m, _objects(m, args, config.bound), config.bound).category()
                name = C.name
            t.finish(check_category(C, progress=False))
        if fmt == "native":
            text = export.to_yaml(export.native_category(C, name=name))
        elif fmt == "graph":
            text = export.to_graphml(export.category_graph(C))
        else:
            text = export.format_table(export.hom_table(C.hom_counts(), C.objects))
    _emit(args, text)
    return run.close()


def _task_argv(task, spec_path):
    task = dict(task)
    command = task.pop("command", None)
    if command is None:
        raise SpecError(f"task {task} has no command")
    argv = [command, str(spec_path)]
    for key, value in task.items():
        flag = "--" + str(key).replace("_", "-")
        if value is True:
            argv.append(flag)
        elif value is False or value is None:
            continue
        elif isinstance(value, (list, tuple)):
            if key == "monads":
                argv.extend([flag] + [str(v) for v in value])
            else:
                argv.extend([flag, ",".join(str(v) for v in value)])
        else:
            argv.extend([flag, str(value)])
    return argv


def cmd_run(args: argparse.Namespace) -> int:
    """Run the spec file's ``tasks`` in order; the worst exit code wins."""
    spec = _load(args)
    if not spec.tasks:
        raise SpecError(f"{args.spec} declares no tasks")
    parser = build_parser()
    worst = 0
    for i, task in enumerate(spec.tasks):
        argv = _task_argv(task, args.spec)
        if args.bound is not None and "--bound" not in argv:
            argv.extend(["--bound", str(args.bound)])
        logger.info("task %d: %s", i, " ".join(argv))
        worst = max(worst, dispatch(parser.parse_args(argv)))
    return worst


def _common(p, formats=True):
    p.add_argument("spec", nargs="?", default=None, help="YAML spec file")
    p.add_argument("--bound", type=int, default=None, help="degree bound (overrides the spec file's bound)")
    if formats:
        p.add_argument("--format", choices=("table", "graph", "native"), default="table")
    else:
        p.set_defaults(format="table")
    p.add_argument("-o", "--output", default=None, help="write the primary output here instead of stdout")
    p.add_argument("--report", default=None, help="write the JSON run report here")


def build_parser():
    ap = argparse.ArgumentParser(prog="catsharp", description="Familial monads, theory categories and nerves")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="run every law check of a spec file")
    _common(c, formats=False)
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("theory", help="theory category of a monad")
    _common(t)
    t.add_argument("--monad", required=True)
    t.add_argument("--objects", default="", help="comma separated operations, e.g. v,e0,e1,e2")
    t.add_argument("--oracle", action="store_true", help="cross-check against Kleisli maps")
    t.add_argument("--partial", action="store_true", help="report truncated hom-sets instead of failing")
    t.add_argument("--plot", default=None, help="write a hom-count heat map")
    t.set_defaults(func=cmd_theory)

    n = sub.add_parser("nerve", help="nerve of an algebra")
    _common(n)
    n.add_argument("--monad", required=True)
    n.add_argument("--algebra", required=True)
    n.add_argument("--objects", default="")
    n.add_argument("--segal", action="store_true", help="append the Segal condition per object")
    n.set_defaults(func=cmd_nerve)

    s = sub.add_parser("segal", help="Segal condition of a nerve")
    _common(s, formats=False)
    s.add_argument("--monad", required=True)
    s.add_argument("--algebra", required=True)
    s.add_argument("--objects", default="")
    s.set_defaults(func=cmd_segal)

    for command, func in (("compose", cmd_compose), ("coclosure", cmd_coclosure)):
        b = sub.add_parser(command, help=f"{command} of two bicomodules")
        _common(b, formats=False)
        b.add_argument("--left", required=True)
        b.add_argument("--right", required=True)
        b.set_defaults(func=func)

    f = sub.add_parser("free", help="free algebra on a copresheaf")
    _common(f)
    f.add_argument("--monad", required=True)
    f.add_argument("--copresheaf", required=True)
    f.set_defaults(func=cmd_free)

    e = sub.add_parser("em-check", help="laws of a monad morphism")
    _common(e, formats=False)
    e.add_argument("--morphism", required=True)
    e.add_argument("--algebra", default=None, help="also check the algebra induced from this one")
    e.set_defaults(func=cmd_em_check)

    w = sub.add_parser("wreath", help="laws of a wreath and its composite monad")
    _common(w, formats=False)
    w.add_argument("--wreath", default="sm")
    w.add_argument("--compare", default=None, help="monad the composite should be isomorphic to")
    w.add_argument("--limit", type=int, default=64)
    w.set_defaults(func=cmd_wreath)

    m = sub.add_parser("compare-monads", help="isomorphism of two familial monads")
    _common(m, formats=False)
    m.add_argument("--monads", nargs=2, required=True)
    m.add_argument("--limit", type=int, default=64)
    m.set_defaults(func=cmd_compare_monads)

    x = sub.add_parser("export", help="export a category, copresheaf or theory")
    _common(x)
    what = x.add_mutually_exclusive_group(required=True)
    what.add_argument("--category")
    what.add_argument("--copresheaf")
    what.add_argument("--theory", help="monad whose theory category to export")
    x.add_argument("--objects", default="")
    x.set_defaults(func=cmd_export)

    r = sub.add_parser("run", help="run the tasks listed in a spec file")
    r.add_argument("spec")
    r.add_argument("--bound", type=int, default=None)
    r.set_defaults(func=cmd_run)

    return ap


def dispatch(args):
    try:
        return args.func(args)
    except LawViolation as e:
        print(f"law violation: {e}", file=sys.stderr)
        return 1
    except (CatsharpError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=_LEVELS[min(args.verbose, 2)], stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    return dispatch(args)
