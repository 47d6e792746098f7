"""Classification of the hand-built face configurations and their
single-degree perturbations."""

from defcolor import fixtures as fx
from defcolor.discharging import FaceClass, classify_face
from defcolor.embedding import girth


def classify(fixture):
    return classify_face(fixture.graph, fixture.face)


def test_all_fixture_graphs_have_girth_five():
    graphs = [fx.special_face().graph, fx.x1_face().graph,
              fx.x2_face()[0].graph, fx.y1_face()[0].graph,
              fx.y2_face().graph, fx.terrible_face()[0].graph]
    for g in graphs:
        assert girth(g) == 5
        assert g.genus == 0


def test_special_and_perturbations():
    assert classify(fx.special_face()) is FaceClass.SPECIAL
    assert classify(fx.special_face(hub=11)) is not FaceClass.SPECIAL
    assert classify(fx.special_face(p_deg=6)) is not FaceClass.SPECIAL
    assert classify(fx.special_face(q_deg=4)) is not FaceClass.SPECIAL


def test_x1_and_perturbations():
    assert classify(fx.x1_face()) is FaceClass.X1
    assert classify(fx.x1_face(h1=11)) is not FaceClass.X1
    assert classify(fx.x1_face(s_deg=4)) is not FaceClass.X1
    # same degrees but the outside neighbor of the 3-vertex turns high
    assert classify(fx.x1_face(external_high=True)) is not FaceClass.X1


def test_x2_and_perturbations():
    fix, x, y = fx.x2_face()
    assert classify(fix) is FaceClass.X2
    assert classify(fx.x2_face(h2=11)[0]) is not FaceClass.X2
    assert classify(fx.x2_face(u_deg=5)[0]) is not FaceClass.X2
    # the 4-vertex neighbor pattern needs its fourth neighbor at 2+
    assert classify(fx.x2_face(y_deg=1)[0]) is not FaceClass.X2


def test_y1_and_perturbations():
    fix, _ = fx.y1_face()
    assert classify(fix) is FaceClass.Y1
    assert classify(fx.y1_face(h_deg=11)[0]) is not FaceClass.Y1
    assert classify(fx.y1_face(w_extra=1)[0]) is not FaceClass.Y1
    # bumping the 4-vertex to 5 lands on the Special degree pattern
    bumped = fx.y1_face(u_extra=1)[0]
    assert classify(bumped) is not FaceClass.Y1
    assert classify(bumped) is FaceClass.SPECIAL


def test_y2_and_perturbations():
    assert classify(fx.y2_face()) is FaceClass.Y2
    assert classify(fx.y2_face(h_deg=11)) is not FaceClass.Y2
    assert classify(fx.y2_face(s_extra=1)) is not FaceClass.Y2
    assert classify(fx.y2_face(r_extra=1)) is not FaceClass.Y2


def test_terrible_and_perturbations():
    fix, names = fx.terrible_face()
    assert classify(fix) is FaceClass.TERRIBLE
    assert classify(fx.terrible_face(v_deg=11)[0]) is not FaceClass.TERRIBLE
    assert classify(fx.terrible_face(u4_extra=1)[0]) is not FaceClass.TERRIBLE
    # starving w4 breaks the cross X2-face's neighbor pattern
    assert classify(fx.terrible_face(w4_children=0)[0]) is not FaceClass.TERRIBLE


def test_classification_mirror_invariant():
    # reversing every rotation flips the traversal direction of every
    # boundary walk; classes must not move
    from defcolor.embedding import EmbeddedGraph
    from defcolor.fixtures import find_face

    fixtures = [(fx.special_face(), FaceClass.SPECIAL),
                (fx.x1_face(), FaceClass.X1),
                (fx.x2_face()[0], FaceClass.X2),
                (fx.y1_face()[0], FaceClass.Y1),
                (fx.y2_face(), FaceClass.Y2),
                (fx.terrible_face()[0], FaceClass.TERRIBLE)]
    for fix, want in fixtures:
        g = fix.graph
        mirror = EmbeddedGraph([tuple(reversed(r)) for r in g.rotation],
                               g.twists)
        face = find_face(mirror, fix.face_verts)
        assert classify_face(mirror, face) is want


def test_cross_faces_of_composite_fixtures():
    fix, _ = fx.y1_face()
    g = fix.graph
    classes = {classify_face(g, f) for f in g.faces if f.degree == 5}
    assert {FaceClass.Y1, FaceClass.X1, FaceClass.X2} <= classes
    fix2 = fx.y2_face()
    classes2 = {classify_face(fix2.graph, f)
                for f in fix2.graph.faces if f.degree == 5}
    assert {FaceClass.Y2, FaceClass.X1} <= classes2
