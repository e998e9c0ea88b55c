import pytest
from hypothesis import given, settings, strategies as st

from schubsing.errors import NotInInterval
from schubsing.rootsys import build_root_system
from schubsing.schubert import (
    WeightSet,
    bruhat_graph,
    curve_count,
    curve_weights,
    deodhar_check,
    rationally_smooth_at,
    rationally_smooth_variety,
    variety,
)
from schubsing.weyl import all_elements, from_word, lower_interval, reflection_of

from conftest import roots



def test_b2_curve_weights_frozen(b2):
    rs = b2.rs
    # [DERIVED] weights at each point of [e, s1 s2 s1]
    assert curve_weights(b2.w, b2.e).roots == roots(rs, (-2, -1), (-1, 0), (0, -1))
    assert curve_weights(b2.w, b2.ra).roots == roots(rs, (-2, -1), (0, -1), (1, 0))
    for x in lower_interval(b2.w):
        assert curve_count(b2.w, x) == 3


def test_not_in_interval(b2):
    with pytest.raises(NotInInterval):
        curve_weights(b2.w, from_word(b2.rs, [2, 1, 2]))


def test_weightset_json(b2):
    ws = curve_weights(b2.w, b2.e)
    assert ws.to_json() == sorted(ws.to_json())
    assert WeightSet.of(ws.roots) == ws
    assert ws <= ws | curve_weights(b2.w, b2.ra)


def test_deodhar_b2(b2):
    # [DERIVED] upward roots at e are b, a, 2a+b
    X = variety(b2.w)
    assert set(X.upward_roots(b2.e)) == {b2.b, b2.a, b2.a2b}
    assert deodhar_check(b2.w, b2.e)


def test_rational_smoothness_b2(b2):
    ok, ev = rationally_smooth_variety(b2.w)
    assert ok and ev.poincare == [1, 2, 2, 1] and not ev.bad_points
    assert all(rationally_smooth_at(b2.w, x) for x in lower_interval(b2.w))


def test_rational_smoothness_a3_singular():
    rs = build_root_system("A3")
    w = from_word(rs, [2, 1, 3, 2])  # 3412
    ok, ev = rationally_smooth_variety(w)
    assert not ok and not ev.poincare_symmetric and ev.bad_points
    assert not rationally_smooth_at(w, from_word(rs, []))
    assert rationally_smooth_at(w, w)


def test_bruhat_graph_edges(b2):
    edges = bruhat_graph(b2.w)
    # every vertex has degree l(w) when the variety is rationally smooth
    deg = {}
    for x, y in edges:
        deg[x] = deg.get(x, 0) + 1
        deg[y] = deg.get(y, 0) + 1
    assert set(deg.values()) == {3}


@pytest.mark.parametrize("desc", ["A3", "B3", "C3"])
def test_curve_invariants_exhaustive(desc):
    rs = build_root_system(desc)
    for w in all_elements(rs):
        X = variety(w)
        for x in X.interval:
            tw = X.curve_weights(x)
            xinv = x.inverse()
            assert all(xinv.sends_negative(g.index) for g in tw)
            assert len(tw) >= w.length
            assert deodhar_check(w, x)
        assert X.curve_weights(w).roots == frozenset(
            g for g in rs.positive_roots if w.inverse().sends_negative(g.index)
        )


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["B3", "C3", "A4", "D4"]), st.data())
def test_curves_at_top_and_identity(desc, data):
    rs = build_root_system(desc)
    w = data.draw(st.sampled_from(all_elements(rs)))
    e = from_word(rs, [])
    # at e the T-curves go to the reflections below w
    tw = curve_weights(w, e)
    assert all(not g.is_positive for g in tw)
    iv = lower_interval(w)
    assert tw.roots == frozenset(-g for g in rs.positive_roots if reflection_of(rs, g) in iv)
    assert len(curve_weights(w, w)) == w.length
