import random

import pytest
from hypothesis import given, settings, strategies as st

from ahomotopy import (Cone, ConeMap, GraphMap, HomotopyGrid, StablePath, certify_no_cone_map,
                       concat, cone_from_quadruple, constant_map, constant_path, cycle_graph,
                       enumerate_homomorphisms, hconcat, hreverse, identity_cone, identity_map,
                       map_path, obstruction_cone, path_graph, pushforward_cone, reverse,
                       search_cone_maps, verify_cone_map, winding_number)
from ahomotopy.cones import _compositions, check_report
from ahomotopy.errors import InvalidCone, InvalidMap

C4, C5, C6 = cycle_graph(4), cycle_graph(5), cycle_graph(6)


def constant_cone(g, v=0):
    return Cone(g, constant_path(g, v), (0, 0, 0, 0))


def squash(word):
    return tuple(v for i, v in enumerate(word) if i == 0 or v != word[i - 1])


def assert_winding_sound(src, cm):
    h = cm.target_cone.apex
    if h.num_vertices >= 5 and h == cycle_graph(h.num_vertices):
        assert winding_number(map_path(cm.map, src.cycle)) == winding_number(cm.target_cone.cycle)


def test_cone_validation():
    with pytest.raises(InvalidCone):
        Cone(C5, StablePath(C5, (0, 1, 2)), (0, 0, 0, 0))
    with pytest.raises(InvalidCone):
        identity_cone(5, (0, 2, 1, 3))
    with pytest.raises(InvalidCone):
        identity_cone(5, (0, 1, 2, 6))
    with pytest.raises(InvalidCone):
        identity_cone(5, (0, 1, 2))


def test_quadruple_constant():
    p = constant_path(C5, 3)
    cone = cone_from_quadruple(p, p, p, p, 3, 3, 3, 3)
    assert cone.word == (3,) and cone.vertices == (3, 3, 3, 3)


def test_quadruple_identity_cycle():
    p1, p2 = StablePath(C5, (0, 1)), StablePath(C5, (2, 1))
    q1, q2 = StablePath(C5, (0, 4)), StablePath(C5, (2, 3, 4))
    cone = cone_from_quadruple(p1, p2, q1, q2, 0, 1, 2, 4)
    assert cone.word == (0, 1, 2, 3, 4, 0)
    assert cone.marks == (0, 1, 2, 4) and cone.vertices == (0, 1, 2, 4)
    assert cone.decompose() == (p1, p2, q1, q2)


def test_quadruple_endpoint_mismatch():
    p = StablePath(C5, (0, 1))
    with pytest.raises(InvalidCone):
        cone_from_quadruple(p, p, p, p, 0, 1, 2, 4)


@st.composite
def cones(draw):
    n = draw(st.integers(3, 7))
    g = cycle_graph(n)
    start = draw(st.integers(0, n - 1))
    steps = draw(st.lists(st.sampled_from((-1, 0, 1)), max_size=8))
    w = [start]
    for d in steps:
        w.append((w[-1] + d) % n)
    back = list(reversed(w))[1:]
    loop = draw(st.booleans())
    word = w + ([(w[-1] + i) % n for i in range(1, n + 1)] if loop else []) + \
        [(v + (n if loop else 0)) % n for v in back]
    p = StablePath(g, word)
    k = len(p.word) - 1
    marks = sorted(draw(st.lists(st.integers(0, k), min_size=4, max_size=4)))
    return Cone(g, p, marks)


@settings(max_examples=200)
@given(cones())
def test_decompose_round_trip(cone):
    p1, p2, q1, q2 = cone.decompose()
    rebuilt = cone_from_quadruple(p1, p2, q1, q2, *cone.vertices)
    assert rebuilt.decompose() == (p1, p2, q1, q2)
    assert rebuilt.vertices == cone.vertices
    # pieces lose stalls at their ends, so compare with stalls collapsed
    assert squash(concat(p1, reverse(p2), q2, reverse(q1)).word) == squash(cone.rebased().word)
    assert winding_number(rebuilt.cycle) == winding_number(cone.cycle)


@settings(max_examples=100)
@given(cones(), st.data())
def test_pushforward_marks_follow_vertices(cone, data):
    maps = enumerate_homomorphisms(cone.apex, C6)
    f = data.draw(st.sampled_from(maps))
    pushed = pushforward_cone(f, cone)
    assert pushed.vertices == tuple(f(v) for v in cone.vertices)
    assert pushed.cycle == map_path(f, cone.cycle)


def test_pushforward_examples():
    cone = identity_cone(5, (0, 1, 2, 4))
    assert pushforward_cone(identity_map(C5), cone) == cone
    assert pushforward_cone(constant_map(C5, C6, 2), cone) == Cone(C6, constant_path(C6, 2), (0,) * 4)
    rot = GraphMap(C5, C5, (1, 2, 3, 4, 0))
    for marks in [(0, 1, 2, 3), (0, 0, 0, 0), (1, 3, 4, 5)]:
        assert winding_number(pushforward_cone(rot, identity_cone(5, marks)).cycle) == 1


def test_pushforward_marks_clamp_into_stripped_stalls():
    f = GraphMap(C5, C6, (0, 0, 1, 2, 1))
    pushed = pushforward_cone(f, identity_cone(5, (0, 1, 2, 4)))
    assert pushed.word == (0, 1, 2, 1, 0)
    assert pushed.marks == (0, 0, 1, 3)


def test_obstruction_cone():
    t = obstruction_cone(identity_cone(5))
    assert t.apex == C6 and t.marks == (0, 0, 0, 0) and winding_number(t.cycle) == 1
    t = obstruction_cone(constant_cone(C5))
    assert t.apex == C5 and winding_number(t.cycle) == 1
    t = obstruction_cone(identity_cone(4))
    assert t.apex == C5


@settings(max_examples=50)
@given(cones())
def test_obstruction_cone_always_winding_one(cone):
    t = obstruction_cone(cone)
    assert t.apex.num_vertices >= 5 and winding_number(t.cycle) == 1


def test_certify_identity_c5():
    r = certify_no_cone_map(identity_cone(5))
    assert (r.n, r.target_winding, r.source_length) == (6, 1, 5)
    assert len(r.entries) == 306
    assert all(w == 0 for _, _, w in r.entries) and r.certified
    assert check_report(identity_cone(5), r)


def test_certify_constant_and_small_cones():
    r = certify_no_cone_map(constant_cone(C5))
    assert r.n == 5 and len(r.entries) == 265 and r.certified
    r = certify_no_cone_map(identity_cone(4))
    assert r.n == 5 and len(r.entries) == 95 and r.certified


def test_certify_on_non_cycle_apex():
    g = path_graph(2)
    cone = Cone(g, StablePath(g, (0, 1, 2, 1, 0)), (0, 1, 2, 3))
    r = certify_no_cone_map(cone)
    assert r.n == 5 and r.certified


def test_verify_degenerate_identity():
    src = identity_cone(5)
    grid = HomotopyGrid(C5, (src.word,))
    cm = ConeMap(identity_map(C5), src, grid, (0, 1, 2, 3))
    assert verify_cone_map(src, cm)


def test_verify_rejects_column_step():
    src = identity_cone(5)
    rows = (src.word, (0,) * 6, src.word)
    cm = ConeMap(identity_map(C5), src, HomotopyGrid.unchecked(C5, rows), (0, 1, 2, 3))
    v = verify_cone_map(src, cm)
    assert not v and v.reason.startswith("column step")


def test_verify_rejects_unequal_outer_columns():
    src = identity_cone(5)
    rows = ((0, 1, 2, 3, 4, 0), (1, 1, 2, 3, 4, 0))
    cm = ConeMap(identity_map(C5), src, HomotopyGrid(C5, rows), (0, 1, 2, 3))
    assert verify_cone_map(src, cm).reason == "outer columns differ"


def test_glued_squares_form_cone_map():
    # four squares between marked columns, from f.c1 down to the constant cycle
    t1 = HomotopyGrid(C4, ((0, 1), (0, 0), (0, 0)))
    t2 = HomotopyGrid(C4, ((2, 1), (1, 0), (0, 0)))
    u2 = HomotopyGrid(C4, ((2, 3), (1, 0), (0, 0)))
    u1 = HomotopyGrid(C4, ((0, 3), (0, 0), (0, 0)))
    alpha = hconcat(t1, hreverse(t2), u2, hreverse(u1))
    assert alpha.row(0) == (0, 1, 2, 3, 0) and alpha.row(alpha.rows) == (0,) * 5
    src = identity_cone(4)
    cm = ConeMap(identity_map(C4), constant_cone(C4), alpha, (0, 1, 2, 3))
    assert verify_cone_map(src, cm)


def test_compositions():
    assert list(_compositions(0, 3)) == [(0, 0, 0)]
    assert list(_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(_compositions(4, 5))) == 70


def test_search_point_cone():
    g = path_graph(0)
    cone = constant_cone(g)
    found = search_cone_maps(cone, cone, 1, 1)
    assert len(found) == 1 and found[0].map == identity_map(g)
    assert verify_cone_map(cone, found[0])


def test_search_identity_cone_positive():
    src = identity_cone(5)
    found = search_cone_maps(src, src, 2, 6)
    assert identity_map(C5) in [cm.map for cm in found]
    for cm in found:
        assert verify_cone_map(src, cm)
        assert_winding_sound(src, cm)


def test_search_small_obstruction_is_empty():
    src = identity_cone(5)
    assert certify_no_cone_map(src).certified
    assert search_cone_maps(src, obstruction_cone(src), 3, 8) == []


def test_search_free_contraction_in_c4():
    src = identity_cone(4)
    found = search_cone_maps(src, constant_cone(C4), 3, 6)
    assert identity_map(C4) in [cm.map for cm in found]
    assert all(verify_cone_map(src, cm) for cm in found)


def test_perturbation_never_breaks_winding():
    rng = random.Random(7)
    src = identity_cone(5)
    found = search_cone_maps(src, src, 2, 6)
    valid = 0
    for _ in range(3000):
        cm = rng.choice(found)
        cells = [list(r) for r in cm.homotopy.cells]
        if len(cells) == 1:
            cells.append(list(cells[0]))
        i, j = rng.randrange(len(cells)), rng.randrange(len(cells[0]))
        cells[i][j] = rng.randrange(5)
        grid = HomotopyGrid.unchecked(C5, tuple(map(tuple, cells)))
        try:
            f = GraphMap(C5, C5, tuple(rng.choice(C5.closed_neighbors(v)) for v in cm.map.assignment)) \
                if rng.random() < 0.3 else cm.map
            cand = ConeMap(f, src, grid, cm.columns)
        except InvalidMap:
            continue
        if verify_cone_map(src, cand):
            valid += 1
            assert_winding_sound(src, cand)
    assert valid > 0
