from fractions import Fraction

import pytest

from defcolor import fixtures as fx
from defcolor.discharging import (FaceClass, apply_rules, audit,
                                  classify_face, classify_faces,
                                  format_fraction, initial_charges,
                                  ledger_csv, sponsor_instances,
                                  sponsor_relation, transfers_csv)
from defcolor.embedding import GirthTooSmallError, build_graph
from defcolor.fixtures import find_face
from defcolor.generate import gen_planar_girth5

from gadget_builders import (r2_gadget, r3_gadget, sponsor_face_pair,
                             sponsor_gadget)

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def transfers_from(transfers, rule, source=None):
    out = [t for t in transfers if t.rule == rule]
    if source is not None:
        out = [t for t in out if t.source == source]
    return out


# -- initial charges ---------------------------------------------------------


def test_initial_charges_values():
    fix = fx.special_face()
    led = initial_charges(fix.graph)
    assert led.vertex_initial[0] == Fraction(-2)      # a 2-vertex
    assert led.face_initial[fix.face.index] == Fraction(-1)  # a 5-face
    assert led.total_initial == Fraction(-12)


def test_initial_charges_dodecahedron():
    led = initial_charges(fx.dodecahedron())
    assert set(led.vertex_initial) == {Fraction(0)}
    assert set(led.face_initial) == {Fraction(-1)}
    assert led.total_initial == Fraction(-12)


def test_initial_charges_petersen_total():
    led = initial_charges(fx.petersen_projective())
    assert led.total_initial == Fraction(6 * 1 - 12)


# -- rules on the simplest graphs -------------------------------------------


def test_apply_rules_c5():
    g = fx.c5()
    led, transfers = apply_rules(g)
    assert all(t.rule == "R5" and t.amount == 1 for t in transfers)
    assert len(transfers) == 10
    assert set(led.vertex_final) == {Fraction(0)}
    assert set(led.face_final) == {Fraction(-6)}
    assert led.total_final == Fraction(-12)
    assert all(t.independent for t in transfers)


def test_apply_rules_dodecahedron_nothing_fires():
    led, transfers = apply_rules(fx.dodecahedron())
    assert transfers == []
    assert led.vertex_final == led.vertex_initial
    assert led.face_final == led.face_initial


def test_apply_rules_warns_below_girth5():
    g = build_graph([[1, 3], [0, 2], [1, 3], [2, 0]])  # C4
    with pytest.warns(UserWarning):
        apply_rules(g)


def test_conservation_on_fixture_zoo():
    graphs = [fx.c5(), fx.dodecahedron(), fx.petersen_projective(),
              fx.special_face().graph, fx.y2_face().graph,
              fx.terrible_face()[0].graph]
    for g in graphs:
        led, _ = apply_rules(g)
        assert led.total_final == led.total_initial == Fraction(6 * g.genus - 12)


def test_transfer_log_is_canonically_sorted():
    g = fx.terrible_face()[0].graph
    _, transfers = apply_rules(g)
    keys = [(t.rule, t.source, t.target, t.witness) for t in transfers]
    assert keys == sorted(keys)


# -- R1/R2/R3 ---------------------------------------------------------------


def test_r1_four_vertex_sends_half_per_incidence():
    fix, names = fx.terrible_face()
    g = fix.graph
    _, transfers = apply_rules(g)
    r1 = transfers_from(transfers, "R1", ("v", names["u4"]))
    assert len(r1) == 4
    assert all(t.amount == HALF for t in r1)


def test_r2_special_and_blocked_faces():
    g, special_verts, pent_verts, p, h2 = r2_gadget()
    special = find_face(g, special_verts)
    pent = find_face(g, pent_verts)
    assert classify_face(g, special) is FaceClass.SPECIAL
    _, transfers = apply_rules(g)
    mine = transfers_from(transfers, "R2", ("v", p))
    by_face = {t.target[1]: t.amount for t in mine}
    assert by_face == {special.index: THREE_HALVES, pent.index: Fraction(1)}


def test_r3_uniform_split_and_zero_eligible():
    g, m, h = r3_gadget(eligible_pentagon=True)
    _, transfers = apply_rules(g)
    r3 = transfers_from(transfers, "R3", ("v", m))
    assert len(r3) == 1
    assert r3[0].amount == Fraction(2 * 6 - 6, 1)
    assert r3[0].amount >= THREE_HALVES

    g0, m0, _ = r3_gadget(eligible_pentagon=False)
    _, transfers0 = apply_rules(g0)
    assert transfers_from(transfers0, "R3", ("v", m0)) == []


# -- face classification -----------------------------------------------------


def test_classification_direction_invariance_and_c5_plain():
    g = fx.c5()
    for f in g.faces:
        assert classify_face(g, f) is FaceClass.PLAIN


def test_bad_face_gets_two_from_high_vertex():
    fix, b = fx.y1_face()
    g = fix.graph
    face = fix.face
    assert classify_face(g, face) is FaceClass.Y1
    _, transfers = apply_rules(g)
    r4 = [t for t in transfers_from(transfers, "R4", ("v", 1))
          if t.target == ("f", face.index)]
    assert len(r4) == 1 and r4[0].amount == Fraction(2)


# -- sponsors ----------------------------------------------------------------


def test_five_five_sponsor_reported_but_silent():
    g, verts, s, t = sponsor_gadget(5, 5, 2)
    f1, f2 = sponsor_face_pair(g, verts)
    kind = sponsor_relation(g, f1, f2)
    assert kind is not None
    assert (kind.d2, kind.d3) == (5, 5)
    assert not kind.sponsor_is_x1 and not kind.sponsor_is_x2
    _, transfers = apply_rules(g)
    assert all(t.rule not in ("R6", "R7", "R8A", "R8B") for t in transfers)


def test_non_sponsor_when_flank_not_high():
    # the sponsored side: its u1/u4 are low, so no sponsorship back
    g, verts, s, t = sponsor_gadget(3, 3, 2)
    f1, f2 = sponsor_face_pair(g, verts)
    assert sponsor_relation(g, f2, f1) is None


def test_r6_sponsor_sends_one():
    g, verts, s, t = sponsor_gadget(3, 3, 2)
    f1, f2 = sponsor_face_pair(g, verts)
    _, transfers = apply_rules(g)
    r6 = transfers_from(transfers, "R6", ("f", f1.index))
    assert len(r6) == 1
    assert r6[0].amount == Fraction(1)
    assert r6[0].target == ("f", f2.index)


def test_r7_fires_unless_sponsor_is_x1():
    g, verts, s, t = sponsor_gadget(2, 3, 3)
    f1, f2 = sponsor_face_pair(g, verts)
    assert classify_face(g, f1) is not FaceClass.X1
    _, transfers = apply_rules(g)
    r7 = transfers_from(transfers, "R7", ("f", f1.index))
    assert len(r7) == 1 and r7[0].amount == HALF

    # with w a 2-vertex the pentagon is an X1-face: R7 must stay silent
    gx, vertsx, sx, tx = sponsor_gadget(2, 3, 2)
    fx1, _ = sponsor_face_pair(gx, vertsx)
    assert classify_face(gx, fx1) is FaceClass.X1
    _, transfersx = apply_rules(gx)
    assert transfers_from(transfersx, "R7", ("f", fx1.index)) == []


def test_r8b_with_r1_refund():
    g, verts, s, t = sponsor_gadget(2, 4, 3)
    f1, f2 = sponsor_face_pair(g, verts)
    assert classify_face(g, f1) is not FaceClass.X2
    _, transfers = apply_rules(g)
    r8b = transfers_from(transfers, "R8B", ("f", f1.index))
    assert len(r8b) == 1 and r8b[0].amount == Fraction(1)
    refund = [tr for tr in transfers_from(transfers, "R1", ("v", t))
              if tr.target == ("f", f1.index)]
    assert refund and refund[0].amount == HALF


def test_r8a_from_x2_face():
    fix, x, y = fx.x2_face()
    g = fix.graph
    face = fix.face
    assert classify_face(g, face) is FaceClass.X2
    _, transfers = apply_rules(g)
    r8a = transfers_from(transfers, "R8A", ("f", face.index))
    assert len(r8a) == 1 and r8a[0].amount == HALF


def test_r7_r8_couple_r5_instances():
    g, verts, s, t = sponsor_gadget(2, 4, 3)
    f1, f2 = sponsor_face_pair(g, verts)
    _, transfers = apply_rules(g)
    r5_to_s = [tr for tr in transfers_from(transfers, "R5")
               if tr.target == ("v", s)]
    assert len(r5_to_s) == 2  # both faces pay the shared 2-vertex
    assert all(tr.independent is False for tr in r5_to_s)


def test_sponsor_self_comparison_rejected():
    g = fx.c5()
    with pytest.raises(ValueError):
        sponsor_relation(g, g.faces[0], g.faces[0])


# -- terrible fixture: exact finals ------------------------------------------


def test_terrible_fixture_exact_finals():
    fix, names = fx.terrible_face()
    g = fix.graph
    led, transfers = apply_rules(g)
    assert led.face_final[fix.face.index] == HALF
    assert led.vertex_final[names["v"]] == Fraction(0)
    g4 = find_face(g, (names["v"], names["v4"], names["u4"],
                       names["h4"], names["c4"]))
    assert classify_face(g, g4) is FaceClass.X2
    assert led.face_final[g4.index] == Fraction(0)
    assert led.total_final == Fraction(-12)


# -- audit -------------------------------------------------------------------


def test_audit_c5():
    rep = audit(fx.c5(), 10)
    assert any(cv.claim == "face5-negative" for cv in rep.claim_violations)
    assert "vx-degree" in rep.violated_lemmas
    assert "vx-high-general" in rep.violated_lemmas
    vx = [lv for lv in rep.lemma_violations if lv.lemma == "vx-degree"]
    assert len(vx) == 5
    assert "no-22" in rep.violated_lemmas  # C5's 2-vertices are adjacent


def test_audit_dodecahedron():
    rep = audit(fx.dodecahedron(), 10)
    assert all(cv.claim == "face5-negative" for cv in rep.claim_violations)
    assert len(rep.claim_violations) == 12
    vx = [lv for lv in rep.lemma_violations if lv.lemma == "vx-degree"]
    assert len(vx) == 20


def test_audit_rejects_small_girth():
    g = build_graph([[1, 3], [0, 2], [1, 3], [2, 0]])
    with pytest.raises(GirthTooSmallError):
        audit(g, 10)


def test_audit_min_degree_lemma_catches_pendant_vertices():
    # a pendant vertex has final charge -4; only 4.1(iii) explains it
    fix = fx.special_face()
    rep = audit(fix.graph, 10)
    assert any(cv.claim == "vertex-negative" for cv in rep.claim_violations)
    assert "min-degree" in rep.violated_lemmas


def test_audit_flags_high_vertex_below_general_floor():
    g, face_verts, hub = fx.genus2_bad_face_gadget()
    assert g.genus == 2
    rep = audit(g, t=11)
    assert classify_faces(g)[find_face(g, face_verts).index] is FaceClass.Y1
    flagged = {fl.vertex for fl in rep.high_vertex_flags}
    assert hub in flagged
    fl = next(fl for fl in rep.high_vertex_flags if fl.vertex == hub)
    assert fl.final == Fraction(0)
    assert fl.bound == Fraction(1, 2)


def test_audit_no_flags_on_clean_planar_inputs():
    rep = audit(fx.dodecahedron(), 10)
    assert rep.high_vertex_flags == []


# -- export ------------------------------------------------------------------


def test_fraction_format_and_csv():
    assert format_fraction(Fraction(-12)) == "-12/1"
    assert format_fraction(Fraction(3, 2)) == "3/2"
    g = fx.c5()
    led, transfers = apply_rules(g)
    csv = ledger_csv(led)
    lines = csv.strip().splitlines()
    assert lines[0] == "element_kind,element_id,initial,final"
    assert lines[1] == "v,0,-2/1,0/1"
    assert "f,0,-1/1,-6/1" in lines
    tcsv = transfers_csv(transfers)
    assert tcsv.splitlines()[0].startswith("rule,source_kind")
    assert "R5,f,0,v," in tcsv


def test_rule_amounts_on_random_graphs():
    allowed = {HALF, Fraction(1), THREE_HALVES, Fraction(2)}
    for seed in range(12):
        g = gen_planar_girth5(31337 + seed, 40 + 10 * seed)
        led, transfers = apply_rules(g)
        assert led.total_final == led.total_initial == Fraction(-12)
        for t in transfers:
            if t.rule == "R3":
                d = g.degree(t.source[1])
                k = len(transfers_from(transfers, "R3", t.source))
                assert t.amount == Fraction(2 * d - 6, k)
            else:
                assert t.amount in allowed
