"""Command-line entry point: ``knot21 <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce as fold
from pathlib import Path
from typing import Iterator, TextIO

from . import __version__
from .catalog import CatalogError, NAMES, hc_family, k7_family, lookup
from .enumeration import DegreeSpec, InfeasibleSpecError, generate, generate_by_dedup
from .formats import FormatError, from_graph6, read_graphs, to_dot, to_graph6, to_multitext
from .graph import Graph, GraphError
from .moves import DY, YD, move_closure
from .planarity import apex_witness, find_kuratowski, is_planar
from .reduction import count_bound, neighborhood_stats, reduce_pair, second_neighborhood
from .theorem import (case_report, classify, get_case, merge_spec_reports, run_spec,
                      strip_timing)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CommandConfig:
    command: str
    args: argparse.Namespace
    cache_dir: Path
    jobs: int
    verbose: int


# ---------------------------------------------------------------------------
# helpers


def _emit(out: TextIO, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _input_graphs(args, stdin: TextIO) -> list[Graph]:
    if getattr(args, "graph", None):
        return [from_graph6(args.graph)]
    if getattr(args, "name", None):
        return [lookup(args.name).graph]
    gs = read_graphs(stdin.read())
    if not gs:
        raise UsageError("no graph6 input on stdin")
    return gs


def _render(g: Graph, fmt: str, name: str = "G") -> str:
    if fmt == "g6":
        return to_graph6(g)
    if fmt == "dot":
        return to_dot(g, name)
    return _dump({"name": name, "n": g.n, "m": g.m, "graph6": to_graph6(g),
                  "edges": [list(e) for e in g.edges]})


def read_config(path: str | os.PathLike) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for i, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{i}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def default_cache_dir() -> Path:
    env = os.environ.get("KNOT21_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "knot21"


def _cache_path(cache: Path, spec: DegreeSpec) -> Path:
    count, index = spec.shards
    return cache / f"{spec.key()}-{count}-{index}.g6"


def cached_graphs(spec: DegreeSpec, cache: Path | None) -> Iterator[Graph]:
    """Stream the spec's graphs, reading or filling the cache file."""
    if cache is None:
        yield from generate(spec)
        return
    path = _cache_path(cache, spec)
    if path.exists():
        yield from read_graphs(path.read_text())
        return
    cache.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".tmp{os.getpid()}")
    with tmp.open("w") as fh:
        fh.write(f"# {spec.label()} shards={spec.shards[0]}/{spec.shards[1]}\n")
        for g in generate(spec):
            fh.write(to_graph6(g) + "\n")
            yield g
    tmp.replace(path)


def _spec_job(payload) -> dict:
    degrees, tf, shards, audit, cache = payload
    spec = DegreeSpec.parse(degrees, require_triangle_free=tf, shards=shards)
    return run_spec(spec, graphs=cached_graphs(spec, Path(cache) if cache else None), audit=audit)


# ---------------------------------------------------------------------------
# subcommands


def cmd_catalog(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    a = cfg.args
    if a.action == "list":
        for name in NAMES:
            g = lookup(name).graph
            _emit(out, f"{name}\tn={g.n}\tm={g.m}")
        for member in k7_family() + tuple(m for m in hc_family() if m.name.startswith("N")):
            alias = f" ({', '.join(member.aliases)})" if member.aliases else ""
            _emit(out, f"{member.name}{alias}\tn={member.graph.n}\tm={member.graph.m}")
        return EXIT_OK
    if not a.target:
        raise UsageError("catalog show needs a graph name")
    member = lookup(a.target)
    _emit(out, _render(member.graph, a.format, member.name))
    return EXIT_OK


def _pair_of(g: Graph, pair: list[int]) -> tuple[int, int]:
    a, b = pair
    if a not in g or b not in g:
        raise UsageError(f"vertices {a} and {b} must both be in the graph")
    return a, b


def cmd_stats(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    a = cfg.args
    for g in _input_graphs(a, stdin):
        rec: dict = {"graph6": to_graph6(g)}
        if a.pair:
            x, y = _pair_of(g, a.pair)
            rec["pair"] = [x, y]
            rec["stats"] = neighborhood_stats(g, x, y).to_dict()
            rec["count_bound"] = count_bound(g, x, y)
        if a.second is not None:
            rec["second_neighborhood"] = second_neighborhood(g, a.second).to_dict()
        _emit(out, json.dumps(rec, sort_keys=True))
    return EXIT_OK


def cmd_reduce(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    a = cfg.args
    for g in _input_graphs(a, stdin):
        x, y = _pair_of(g, a.pair)
        red = reduce_pair(g, x, y)
        if a.format == "json":
            _emit(out, json.dumps({
                "edges": red.graph.m,
                "count_bound": count_bound(g, x, y),
                "planar": is_planar(red.graph),
                "loop_events": red.loop_events,
                "multigraph": to_multitext(red.graph),
                "transcript": [[op, list(vs)] for op, vs in red.transcript],
            }, sort_keys=True, ensure_ascii=False))
        else:
            out.write(to_multitext(red.graph))
    return EXIT_OK


def cmd_planar(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    for g in _input_graphs(cfg.args, stdin):
        if is_planar(g):
            _emit(out, "planar")
            continue
        if cfg.args.certificate:
            cert = find_kuratowski(g)
            _emit(out, "non-planar " + json.dumps(cert.to_dict() if cert else None, sort_keys=True))
        else:
            _emit(out, "non-planar")
    return EXIT_OK


def cmd_apex(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    for g in _input_graphs(cfg.args, stdin):
        w = apex_witness(g, cfg.args.k)
        line = w.label
        if w.vertices:
            line += " " + " ".join(map(str, w.vertices))
        _emit(out, line)
    return EXIT_OK


def cmd_moves(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    ops = {"dy": DY, "yd": YD, "both": "both"}[cfg.args.op]
    fam = move_closure(_input_graphs(cfg.args, stdin), ops)
    for g in fam.values():
        _emit(out, to_graph6(g))
    return EXIT_OK


def _spec_from(a) -> DegreeSpec:
    count, index = a.shards, a.shard
    if index >= count:
        raise UsageError(f"--shard {index} is out of range for --shards {count}")
    return DegreeSpec.parse(a.degrees, require_connected=a.connected,
                            require_triangle_free=a.triangle_free, shards=(count, index))


def cmd_enum(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    a = cfg.args
    spec = _spec_from(a)
    if a.method == "dedup" and spec.shards[0] > 1:
        raise UsageError("--method dedup does not support sharding")
    source = generate(spec) if a.method == "aug" else generate_by_dedup(spec)
    sink = open(a.out, "w") if a.out else out
    try:
        n = 0
        for g in source:
            sink.write(to_graph6(g) + "\n")
            n += 1
    finally:
        if a.out:
            sink.close()
    if cfg.verbose:
        print(f"{spec.label()}: {n} graphs", file=sys.stderr)
    return EXIT_OK


def cmd_classify(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    for g in _input_graphs(cfg.args, stdin):
        rec = {"graph6": to_graph6(g), **classify(g).to_dict()}
        _emit(out, json.dumps(rec, sort_keys=True))
    return EXIT_OK


def cmd_verify(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    a = cfg.args
    seqs = [DegreeSpec.parse(s).degrees for s in a.sequence] if a.sequence else None
    if seqs and a.case != "maxdeg5":
        raise UsageError("--sequence only applies to --case maxdeg5")
    case = get_case(a.case, seqs)
    cache = None if a.no_cache else str(cfg.cache_dir)
    jobs = [(degs, True, (a.shards, i), not a.no_audit, cache)
            for degs in case.specs for i in range(a.shards)]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_spec_job, jobs))
    else:
        parts = [_spec_job(j) for j in jobs]
    per_spec = []
    for k in range(len(case.specs)):
        chunk = parts[k * a.shards:(k + 1) * a.shards]
        per_spec.append(fold(merge_spec_reports, chunk))
    report = case_report(case, per_spec)
    text = _dump(report)
    if a.report:
        Path(a.report).write_text(text + "\n")
    else:
        _emit(out, text)
    if cfg.verbose or a.report:
        names = [s["match"] or s["code"] for s in report["survivors"]]
        print(f"{case.name}: {report['total']} graphs, {report['two_apex']} 2-apex, "
              f"survivors {names}, {'ok' if report['ok'] else 'MISMATCH'}", file=sys.stderr)
    status = EXIT_OK if report["ok"] else EXIT_MISMATCH
    if a.diff:
        old = json.loads(Path(a.diff).read_text())
        if strip_timing(old) != strip_timing(report):
            print(f"report differs from {a.diff}", file=sys.stderr)
            status = EXIT_MISMATCH
    return status


def seed_corpus(dest: Path) -> list[Path]:
    """Write every named graph and family member as graph6 fixtures."""
    dest.mkdir(parents=True, exist_ok=True)
    written = []
    members = {n: lookup(n).graph for n in NAMES}
    for m in k7_family() + hc_family():
        members.setdefault(m.name, m.graph)
    for name, g in members.items():
        p = dest / f"{name.replace(chr(39), 'p')}.g6"
        p.write_text(to_graph6(g) + "\n")
        written.append(p)
    return written


def cmd_seed_corpus(cfg: CommandConfig, out: TextIO, stdin: TextIO) -> int:
    for p in seed_corpus(Path(cfg.args.out)):
        _emit(out, str(p))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", help="graph6 string (default: graph6 lines on stdin)")
    src.add_argument("--name", help="catalog graph name")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knot21", description="Tools for 21-edge knotted graph searches.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--config", help="key=value file of default flags")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--cache", help="cache directory (env KNOT21_CACHE)")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list or show named graphs")
    c.add_argument("action", choices=["list", "show"])
    c.add_argument("target", nargs="?")
    c.add_argument("--format", choices=["g6", "dot", "json"], default="g6")
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("stats", help="count-equation bookkeeping for a vertex pair")
    _graph_input(s)
    s.add_argument("--pair", type=int, nargs=2, metavar=("A", "B"))
    s.add_argument("--second", type=int, metavar="A", help="second-neighbourhood profile of A")
    s.set_defaults(func=cmd_stats)

    r = sub.add_parser("reduce", help="delete a pair and suppress low-degree vertices")
    _graph_input(r)
    r.add_argument("--pair", type=int, nargs=2, metavar=("A", "B"), required=True)
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.set_defaults(func=cmd_reduce)

    pl = sub.add_parser("planar", help="planarity test")
    _graph_input(pl)
    pl.add_argument("--certificate", action="store_true", help="print a Kuratowski subdivision")
    pl.set_defaults(func=cmd_planar)

    ap = sub.add_parser("apex", help="k-apex witness search")
    _graph_input(ap)
    ap.add_argument("--k", type=int, choices=[0, 1, 2], default=2)
    ap.set_defaults(func=cmd_apex)

    mv = sub.add_parser("moves", help="triangle/Y move closures")
    mv.add_argument("action", choices=["closure"])
    _graph_input(mv)
    mv.add_argument("--op", choices=["dy", "yd", "both"], default="dy")
    mv.set_defaults(func=cmd_moves)

    e = sub.add_parser("enum", help="isomorph-free enumeration by degree multiset")
    e.add_argument("--degrees", required=True, help='e.g. "4^6 3^6"')
    e.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True)
    e.add_argument("--triangle-free", action=argparse.BooleanOptionalAction, default=True)
    e.add_argument("--shards", type=int, default=1)
    e.add_argument("--shard", type=int, default=0)
    e.add_argument("--method", choices=["aug", "dedup"], default="aug")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enum)

    cl = sub.add_parser("classify", help="2-apex / catalog classification")
    _graph_input(cl)
    cl.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run one case of the 21-edge triangle-free search")
    v.add_argument("--case", required=True, choices=["cubic", "4-6-6", "4-3-10", "4-9-2", "maxdeg5"])
    v.add_argument("--sequence", action="append", help="maxdeg5 degree multiset (repeatable)")
    v.add_argument("--report")
    v.add_argument("--shards", type=int, default=1)
    v.add_argument("--no-audit", action="store_true")
    v.add_argument("--no-cache", action="store_true")
    v.add_argument("--diff", help="compare with an earlier report, ignoring timing")
    v.set_defaults(func=cmd_verify)

    sc = sub.add_parser("seed-corpus", help="write all named graphs as graph6 files")
    sc.add_argument("--out", default="corpus")
    sc.set_defaults(func=cmd_seed_corpus)
    return p


_COMMON = {"jobs": int, "cache": str, "verbose": int}


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    conf = read_config(known.config)
    unknown = set(conf) - set(_COMMON)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    try:
        parser.set_defaults(**{k: _COMMON[k](v) for k, v in conf.items()})
    except ValueError as exc:
        raise UsageError(f"bad config value: {exc}") from None


def run(argv: list[str] | None = None, *, stdout: TextIO | None = None,
        stdin: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout or sys.stdout
    inp = stdin or sys.stdin
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_OK if exc.code == 0 else EXIT_USAGE
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if getattr(args, "shards", 1) < 1:
            raise UsageError("--shards must be at least 1")
        cache = Path(os.environ["KNOT21_CACHE"]) if os.environ.get("KNOT21_CACHE") else (
            Path(args.cache) if args.cache else default_cache_dir())
        cfg = CommandConfig(args.command, args, cache, args.jobs, args.verbose)
        return args.func(cfg, out, inp)
    except CatalogError as exc:
        print(f"knot21: unknown graph name: {exc}", file=sys.stderr)
    except FormatError as exc:
        print(f"knot21: malformed graph6: {exc}", file=sys.stderr)
    except InfeasibleSpecError as exc:
        print(f"knot21: infeasible spec: {exc}", file=sys.stderr)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"knot21: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
