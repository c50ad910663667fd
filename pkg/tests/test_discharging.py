"""Tests for the charge ledger, transfer rule, face caps, and the audit."""

from fractions import Fraction

import random

import pytest

from sqcolor.discharging import (
    apply_r1,
    claim3_bound_check,
    describe_config,
    discharge_audit,
    initial_charges,
    render_audit,
)
from sqcolor.errors import NotInClass
from sqcolor.generate import named
from sqcolor.graph_core import Graph
from sqcolor.planar_embed import faces, find_planar_embedding
from sqcolor.reducer import CutTwoVertex, OneVertex, SixCycleTwoVertex


def cycle(k):
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def faces_of(g):
    rs = find_planar_embedding(g)
    assert rs is not None
    return faces(g, rs)


def test_initial_charges_cube():
    g = named("q3")[0]
    ledger = initial_charges(g, faces_of(g))
    assert all(c == 0 for c in ledger.vertex_charge.values())
    assert all(c == -2 for c in ledger.face_charge.values())
    assert ledger.total() == -12


def test_initial_charges_prism():
    g = named("prism6")[0]
    ledger = initial_charges(g, faces_of(g))
    assert all(c == 0 for c in ledger.vertex_charge.values())
    assert sorted(ledger.face_charge.values()) == [-2] * 6 + [0, 0]
    assert ledger.total() == -12


def test_initial_charges_c6():
    g = cycle(6)
    ledger = initial_charges(g, faces_of(g))
    assert all(c == -2 for c in ledger.vertex_charge.values())
    assert all(c == 0 for c in ledger.face_charge.values())
    assert ledger.total() == -12


def test_r1_on_c6_moves_face_charge_to_vertices():
    g = cycle(6)
    fs = faces_of(g)
    after = apply_r1(initial_charges(g, fs), g, fs)
    assert all(c == 0 for c in after.vertex_charge.values())
    assert all(c == -6 for c in after.face_charge.values())
    assert after.total() == -12
    assert len(after.transfers) == 12
    assert all(amount == Fraction(1) for _, _, amount in after.transfers)


def test_r1_is_conservative_on_classics():
    for name in ("q3", "prism6", "dodecahedron", "honeycomb-3", "subdivided-prism"):
        g = named(name)[0]
        fs = faces_of(g)
        before = initial_charges(g, fs)
        after = apply_r1(before, g, fs)
        assert after.total() == before.total() == -12


def test_r1_does_not_mutate_input_ledger():
    g = cycle(6)
    fs = faces_of(g)
    before = initial_charges(g, fs)
    apply_r1(before, g, fs)
    assert all(c == -2 for c in before.vertex_charge.values())
    assert before.transfers == []


def test_r1_pays_once_per_incidence():
    # One 2-vertex (0) on a 7-cycle; pendants push the rest to degree 3.
    # Each of the two 7-walk faces pays vertex 0 exactly once.
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(i, 6 + i) for i in range(1, 7)]
    g = Graph(13, edges)
    fs = faces_of(g)
    after = apply_r1(initial_charges(g, fs), g, fs)
    pure = [i for i, f in enumerate(fs) if f.length == 7]
    assert len(pure) == 1
    paid = [t for t in after.transfers if t[0] == pure[0]]
    assert paid == [(pure[0], 0, Fraction(1))]
    assert after.vertex_charge[0] == -2 + 2
    assert len([t for t in after.transfers if t[1] == 0]) == 2


def test_r1_pays_cut_two_vertex_twice_from_one_face():
    # A path's single face walks each edge twice, so the middle 2-vertex
    # of p3 tails two darts of that face and is paid twice.
    g = named("p3")[0]
    fs = faces_of(g)
    assert len(fs) == 1
    after = apply_r1(initial_charges(g, fs), g, fs)
    assert after.vertex_charge[1] == -2 + 2
    assert [t for t in after.transfers if t[1] == 1] == [(0, 1, Fraction(1))] * 2


def test_claim3_skip_reasons():
    g = named("p5")[0]
    report = claim3_bound_check(g, faces_of(g))
    assert not report.checked and report.reason == "acyclic"
    g = named("two-heptagons")[0]
    report = claim3_bound_check(g, faces_of(g))
    assert not report.checked and report.reason == "cut 2-vertex present"
    g = cycle(6)
    report = claim3_bound_check(g, faces_of(g))
    assert not report.checked and report.reason == "close 2-vertices on a cycle"
    assert report.passed


def spread_twelve_cycle():
    """12-cycle with 2-vertices only at 0, 4, 8; pendants suppress the rest."""
    edges = [(i, (i + 1) % 12) for i in range(12)]
    nxt = 12
    for v in range(12):
        if v % 4 != 0:
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges)


def test_claim3_checked_and_tight():
    g = spread_twelve_cycle()
    report = claim3_bound_check(g, faces_of(g))
    assert report.checked
    assert report.passed
    twelve = [r for r in report.rows if r.length == 12]
    assert len(twelve) == 1
    assert twelve[0].two_vertices == 3
    assert twelve[0].bound == 3


def test_claim3_seven_face_cap():
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(i, 6 + i) for i in range(1, 7)]
    g = Graph(13, edges)
    report = claim3_bound_check(g, faces_of(g))
    assert report.checked
    seven = [r for r in report.rows if r.length == 7]
    assert len(seven) == 1
    assert seven[0].two_vertices == 1
    assert seven[0].bound == 1
    assert report.passed


def test_audit_c6():
    g = cycle(6)
    report = discharge_audit(g)
    assert report.initial_total == -12
    assert report.final_total == -12
    assert report.negative_vertices == ()
    assert report.negative_faces == ((0, 6, Fraction(-6)), (1, 6, Fraction(-6)))
    assert isinstance(report.config, SixCycleTwoVertex)
    assert report.dichotomy_holds


def test_audit_tree_counts_one_face():
    g = named("p2")[0]
    report = discharge_audit(g)
    assert report.face_count == 1
    assert report.initial_total == -12
    assert report.final_total == -12
    assert report.config == OneVertex(0)


def test_audit_single_vertex():
    report = discharge_audit(Graph(1, []))
    assert report.face_count == 1
    assert report.initial_total == -12
    assert report.final_total == -12
    assert report.config == OneVertex(0)


def test_audit_two_heptagons():
    g = named("two-heptagons")[0]
    report = discharge_audit(g)
    assert report.initial_total == report.final_total == -12
    assert report.config == CutTwoVertex(14, 0, 7)
    assert not report.claim3.checked


def test_audit_rejects_out_of_class():
    with pytest.raises(NotInClass):
        discharge_audit(cycle(5))
    with pytest.raises(NotInClass):
        discharge_audit(named("q3")[0])
    with pytest.raises(NotInClass):
        discharge_audit(Graph(0, []))
    disconnected = Graph(12, [(i, (i + 1) % 6) for i in range(6)]
                    + [(6 + i, 6 + (i + 1) % 6) for i in range(6)])
    with pytest.raises(NotInClass):
        discharge_audit(disconnected)
    k5 = Graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    with pytest.raises(NotInClass):
        discharge_audit(k5)
    heawood_edges = [(i, (i + 1) % 14) for i in range(14)]
    heawood_edges += [(i, (i + (5 if i % 2 == 0 else -5)) % 14) for i in range(14)]
    heawood = Graph(14, sorted({(min(u, v), max(u, v)) for u, v in heawood_edges}))
    with pytest.raises(NotInClass):
        discharge_audit(heawood)


def test_audit_dichotomy_across_corpus(corpus12):
    rng = random.Random(19)
    for g in rng.sample(corpus12, 200):
        report = discharge_audit(g)
        assert report.initial_total == -12
        assert report.final_total == -12
        assert report.dichotomy_holds
        assert report.claim3.passed


def test_render_audit_c6():
    text = render_audit(discharge_audit(cycle(6)))
    assert text == (
        "vertices=6\n"
        "edges=6\n"
        "faces=2\n"
        "initial_total=-12\n"
        "final_total=-12\n"
        "negative_face face=0 length=6 charge=-6\n"
        "negative_face face=1 length=6 charge=-6\n"
        "config=sixcycle_two_vertex cycle=1,2,3,4,5,0 two_vertex=0\n"
        "claim3=skipped reason=close 2-vertices on a cycle\n"
        "dichotomy=ok"
    )


def test_render_audit_full_lists_all_charges():
    text = render_audit(discharge_audit(named("p2")[0]), full=True)
    assert "vertex_charge v=0 charge=-4" in text
    assert "vertex_charge v=1 charge=-4" in text
    assert "face_charge face=0 charge=-4" in text
    assert "claim3=skipped reason=acyclic" in text
    assert text.endswith("dichotomy=ok")


def test_describe_config_formats():
    assert describe_config(None) == "none"
    assert describe_config(OneVertex(3)) == "one_vertex v=3"
    assert describe_config(CutTwoVertex(14, 0, 7)) == "cut_two_vertex u=14 x=0 y=7"
