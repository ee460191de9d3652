from __future__ import annotations

import pytest

from knot21.canonical import canonical_form
from knot21.catalog import get
from knot21.enumeration import (DegreeSpec, EnumStats, InfeasibleSpecError, generate,
                                generate_by_dedup)
from knot21.graph import degree_sequence, is_connected, is_triangle_free

from support import brute_isomorphic, labeled_realizations


def _profile(g):
    """Isomorphism invariant used only to narrow matching candidates."""
    return tuple(sorted(
        (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))),
         sum(1 for x in g.neighbors(v) for y in g.neighbors(v) if x < y and g.has_edge(x, y)))
        for v in g.vertices))


def _oracle(degrees, connected, triangle_free):
    """Filter every labeled realization, then dedup by exhaustive matching."""
    buckets: dict[tuple, list] = {}
    for g in labeled_realizations(list(degrees)):
        if connected and not is_connected(g):
            continue
        if triangle_free and not is_triangle_free(g):
            continue
        reps = buckets.setdefault(_profile(g), [])
        if not any(brute_isomorphic(g, r) for r in reps):
            reps.append(g)
    return [r for reps in buckets.values() for r in reps]


def _same_classes(got, want):
    assert len(got) == len(want)
    for g in got:
        assert sum(brute_isomorphic(g, w) for w in want) == 1


def test_parse_and_label():
    spec = DegreeSpec.parse("4^6 3^6")
    assert spec.degrees == (4,) * 6 + (3,) * 6
    assert spec.n == 12 and spec.edges == 21
    assert spec.label() == "4^6 3^6"
    assert DegreeSpec.parse("3,3 3 3").label() == "3^4"
    assert spec.key() == DegreeSpec.parse("3^6 4^6").key()
    assert spec.key() != DegreeSpec.parse("4^6 3^6", require_triangle_free=False).key()


@pytest.mark.parametrize("text", ["3^5", "", "x^2", "9^3", "3^17"])
def test_infeasible(text):
    with pytest.raises(InfeasibleSpecError):
        DegreeSpec.parse(text)


def test_bad_shards():
    with pytest.raises(InfeasibleSpecError):
        DegreeSpec((3,) * 6, shards=(2, 2))


@pytest.mark.parametrize("text, count", [("3^6", 1), ("3^4", 0), ("3^8", 2), ("3^10", 6),
                                         ("4^3 3^4", 1), ("4^6", 0)])
def test_small_counts(text, count):
    spec = DegreeSpec.parse(text)
    got = list(generate(spec))
    assert len(got) == count
    assert len(list(generate_by_dedup(spec))) == count


def test_k33_is_the_only_cubic_six():
    (g,) = generate(DegreeSpec.parse("3^6"))
    assert canonical_form(g) == get("K33").code


@pytest.mark.parametrize("degrees, connected, tf", [
    ((3,) * 6, True, True),
    ((3,) * 6, True, False),
    ((3,) * 8, True, True),
    ((3,) * 8, True, False),
    ((4, 4, 4, 3, 3, 3, 3), True, True),
    ((4, 4, 4, 3, 3, 3, 3), True, False),
    ((4, 4, 3, 3, 3, 3), True, False),
    ((3, 3, 2, 2, 2, 2), True, True),
    ((2,) * 7, False, False),
    ((3, 3, 3, 3, 2, 2, 2, 2), False, True),
])
def test_complete_against_labeled_brute_force(degrees, connected, tf):
    spec = DegreeSpec(degrees, require_connected=connected, require_triangle_free=tf)
    want = _oracle(spec.degrees, connected, tf)
    got = list(generate(spec))
    _same_classes(got, want)
    _same_classes(list(generate_by_dedup(spec)), want)
    for g in got:
        assert sorted(degree_sequence(g), reverse=True) == list(spec.degrees)


@pytest.mark.parametrize("text", ["3^12", "4^9 3^2", "4^3 3^6"])
def test_two_generators_agree(text):
    spec = DegreeSpec.parse(text)
    a = [canonical_form(g) for g in generate(spec)]
    b = {canonical_form(g) for g in generate_by_dedup(spec)}
    assert len(a) == len(set(a)), "canonical augmentation emitted an isomorphic pair"
    assert set(a) == b


@pytest.mark.parametrize("count", [2, 3, 5])
def test_shards_partition_the_output(count):
    base = DegreeSpec.parse("3^12")
    whole = {canonical_form(g) for g in generate(base)}
    parts = []
    for i in range(count):
        spec = DegreeSpec(base.degrees, shards=(count, i))
        parts.append([canonical_form(g) for g in generate(spec)])
    union = [c for p in parts for c in p]
    assert len(union) == len(set(union)), "shards overlap"
    assert set(union) == whole


def test_shard_split_above_tree_depth():
    base = DegreeSpec.parse("3^6")
    got = [g for i in range(3) for g in generate(DegreeSpec(base.degrees, shards=(3, i)), split_depth=9)]
    assert len(got) == 1


def test_stats_are_filled():
    stats = EnumStats()
    out = list(generate(DegreeSpec.parse("3^10"), stats=stats))
    assert stats.emitted == len(out) == 6
    assert stats.nodes > 0 and stats.canon_calls > 0
