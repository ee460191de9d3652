"""Classification of enumerated graphs and the 21-edge triangle-free case runs."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .canonical import canonical_form
from .catalog import get, match_family
from .enumeration import DegreeSpec, EnumStats, generate
from .formats import to_graph6
from .graph import Graph, degree_sequence, is_triangle_free
from .planarity import (ApexWitness, apex_witness, is_homeomorphic_k33, is_planar,
                        verify_apex_witness)
from .reduction import count_bound, reduce_pair

EDGES = 21


class Verdict(enum.Enum):
    NOT_IK_TWO_APEX = "NotIK_TwoApex"
    IK_CATALOG_MATCH = "IK_CatalogMatch"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: ApexWitness | None = None
    name: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.name is not None:
            out["name"] = self.name
        return out


def classify(g: Graph) -> Classification:
    w = apex_witness(g, 2)
    if w.is_apex:
        if not verify_apex_witness(g, w):
            raise AssertionError(f"apex witness {w.vertices} does not leave a planar graph")
        return Classification(Verdict.NOT_IK_TWO_APEX, witness=w)
    member = match_family(g)
    if member is not None:
        name = member.aliases[0] if member.aliases else member.name
        return Classification(Verdict.IK_CATALOG_MATCH, witness=w, name=name)
    return Classification(Verdict.UNKNOWN, witness=w)


# ---------------------------------------------------------------------------
# cases


def maxdeg5_sequences(max_degree: int | None = None) -> list[tuple[int, ...]]:
    """Degree multisets with sum 42, minimum 3 and maximum at least 5.

    Only orders that admit a triangle-free graph with 21 edges are listed
    (at least 10 vertices), and a vertex of degree d needs d + 3 vertices:
    its neighbours are independent and each needs two more neighbours.
    """
    out = []

    def rec(prefix: list[int], left: int, cap: int) -> None:
        if left == 0:
            n = len(prefix)
            if n >= 10 and prefix[0] >= 5 and prefix[0] + 3 <= n:
                out.append(tuple(prefix))
            return
        for d in range(min(cap, left), 2, -1):
            if left - d in (1, 2):
                continue
            prefix.append(d)
            rec(prefix, left - d, d)
            prefix.pop()

    rec([], 2 * EDGES, max_degree or 2 * EDGES)
    return sorted(out, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class Case:
    name: str
    specs: tuple[str, ...]
    expected: tuple[str, ...]


CASES = {
    "cubic": Case("cubic", ("3^14",), ("C14",)),
    "4-6-6": Case("4-6-6", ("4^6 3^6",), ("H12",)),
    "4-3-10": Case("4-3-10", ("4^3 3^10",), ()),
    "4-9-2": Case("4-9-2", ("4^9 3^2",), ()),
}


def maxdeg5_case(sequences: Iterable[Iterable[int]] | None = None) -> Case:
    seqs = sequences if sequences is not None else maxdeg5_sequences()
    specs = tuple(DegreeSpec(tuple(s)).label() for s in seqs)
    return Case("maxdeg5", specs, ())


def get_case(name: str, sequences=None) -> Case:
    if name == "maxdeg5":
        return maxdeg5_case(sequences)
    try:
        return CASES[name]
    except KeyError:
        raise ValueError(f"unknown case {name!r}; known: {', '.join([*CASES, 'maxdeg5'])}") from None


# ---------------------------------------------------------------------------
# audits


@dataclass
class AuditTally:
    pairs: int = 0
    counterexamples: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"pairs": self.pairs, "counterexamples": self.counterexamples}

    def merge(self, other: "AuditTally") -> "AuditTally":
        return AuditTally(self.pairs + other.pairs,
                          sorted(self.counterexamples + other.counterexamples))


def audit_graph(g: Graph, planar8: AuditTally, planar9: AuditTally) -> None:
    """Run both small-bound planarity checks on every vertex pair of ``g``."""
    g6 = None
    for a, b in combinations(g.vertices, 2):
        bound = count_bound(g, a, b)
        if bound > 9:
            continue
        red = reduce_pair(g, a, b).graph
        if bound <= 8:
            planar8.pairs += 1
            if not is_planar(red):
                g6 = g6 or to_graph6(g)
                planar8.counterexamples.append([g6, a, b])
        else:
            planar9.pairs += 1
            if not is_planar(red) and not is_homeomorphic_k33(red):
                g6 = g6 or to_graph6(g)
                planar9.counterexamples.append([g6, a, b])


# ---------------------------------------------------------------------------
# reports


def _survivor(g: Graph, c: Classification) -> dict:
    return {"graph6": to_graph6(g), "code": canonical_form(g).hex(),
            "match": c.name, "verdict": c.verdict.value}


def run_spec(spec: DegreeSpec, *, graphs: Iterable[Graph] | None = None, audit: bool = True) -> dict:
    """Classify (and audit) every graph of one spec or shard.

    ``graphs`` lets a caller supply a cached enumeration instead of
    regenerating it.
    """
    t0 = time.perf_counter()
    stats = EnumStats()
    source: Iterator[Graph] = iter(graphs) if graphs is not None else generate(spec, stats=stats)
    total = two_apex = 0
    survivors = []
    shape_errors = []
    planar8, planar9 = AuditTally(), AuditTally()
    seen: set[bytes] = set()
    duplicates = 0
    for g in source:
        total += 1
        code = canonical_form(g)
        if code in seen:
            duplicates += 1
        seen.add(code)
        c = classify(g)
        if c.verdict is Verdict.NOT_IK_TWO_APEX:
            two_apex += 1
        else:
            survivors.append(_survivor(g, c))
            if g.m != EDGES or min(degree_sequence(g)) < 3 or not is_triangle_free(g):
                shape_errors.append(to_graph6(g))
        if audit:
            audit_graph(g, planar8, planar9)
    return {
        "degrees": spec.label(),
        "key": spec.key(),
        "shards": {"count": spec.shards[0], "done": [spec.shards[1]]},
        "total": total,
        "two_apex": two_apex,
        "duplicates": duplicates,
        "survivors": sorted(survivors, key=lambda s: s["code"]),
        "shape_errors": sorted(shape_errors),
        "audit": {"planar8": planar8.to_dict(), "planar9": planar9.to_dict()},
        "timing": {"seconds": round(time.perf_counter() - t0, 3)},
    }


def merge_spec_reports(a: dict, b: dict) -> dict:
    """Combine two shard reports of the same spec; associative and commutative."""
    if a["key"] != b["key"] or a["shards"]["count"] != b["shards"]["count"]:
        raise ValueError("can only merge shards of the same spec and shard count")
    done = sorted(set(a["shards"]["done"]) | set(b["shards"]["done"]))
    if len(done) != len(a["shards"]["done"]) + len(b["shards"]["done"]):
        raise ValueError("overlapping shards")
    merged_audit = {}
    for k in ("planar8", "planar9"):
        x, y = a["audit"][k], b["audit"][k]
        merged_audit[k] = {"pairs": x["pairs"] + y["pairs"],
                           "counterexamples": sorted(x["counterexamples"] + y["counterexamples"])}
    return {
        "degrees": a["degrees"],
        "key": a["key"],
        "shards": {"count": a["shards"]["count"], "done": done},
        "total": a["total"] + b["total"],
        "two_apex": a["two_apex"] + b["two_apex"],
        "duplicates": a["duplicates"] + b["duplicates"],
        "survivors": sorted(a["survivors"] + b["survivors"], key=lambda s: s["code"]),
        "shape_errors": sorted(a["shape_errors"] + b["shape_errors"]),
        "audit": merged_audit,
        "timing": {"seconds": round(a["timing"]["seconds"] + b["timing"]["seconds"], 3)},
    }


def case_report(case: Case, spec_reports: list[dict]) -> dict:
    """Assemble the case report and compare survivors with the expected catalog graphs."""
    expected = sorted(canonical_form(get(n).graph).hex() for n in case.expected)
    survivors = sorted((s for r in spec_reports for s in r["survivors"]), key=lambda s: s["code"])
    complete = all(len(r["shards"]["done"]) == r["shards"]["count"] for r in spec_reports)
    bad8 = sum(len(r["audit"]["planar8"]["counterexamples"]) for r in spec_reports)
    bad9 = sum(len(r["audit"]["planar9"]["counterexamples"]) for r in spec_reports)
    ok = (
        complete
        and [s["code"] for s in survivors] == expected
        and not bad8 and not bad9
        and not any(r["duplicates"] or r["shape_errors"] for r in spec_reports)
    )
    return {
        "case": case.name,
        "expected": list(case.expected),
        "expected_codes": expected,
        "total": sum(r["total"] for r in spec_reports),
        "two_apex": sum(r["two_apex"] for r in spec_reports),
        "survivors": survivors,
        "specs": spec_reports,
        "complete": complete,
        "ok": ok,
        "timing": {"seconds": round(sum(r["timing"]["seconds"] for r in spec_reports), 3)},
    }


def strip_timing(report: dict) -> dict:
    """Copy of a report without timing fields, for byte-stable comparison."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k != "timing"}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


def verify_theorem1(case: str | Case, *, audit: bool = True, sequences=None) -> dict:
    c = case if isinstance(case, Case) else get_case(case, sequences)
    reports = [run_spec(DegreeSpec.parse(s), audit=audit) for s in c.specs]
    return case_report(c, reports)
