import random
from fractions import Fraction

import pytest

from dihom import dmetric as dm
from dihom.errors import DomainError, InputSyntaxError
from oracles import quotient_distance_oracle

F = Fraction


def two_chain():
    # a -> b at cost 1, no way back
    return dm.make_space(
        ["a", "b"], lambda p, q: F(0) if p == q else (F(1) if p == "a" else dm.INF)
    )


def test_asymmetric_space_is_valid():
    assert dm.validate(two_chain()) == []


def test_nonzero_self_distance_is_flagged():
    space = dm.DMetricSpace(("a",), ((F(1),),))
    assert any("!= 0" in v for v in dm.validate(space))


def test_triangle_violation_is_flagged():
    space = dm.DMetricSpace(
        ("a", "b", "c"),
        (
            (F(0), F(1), F(5)),
            (dm.INF, F(0), F(1)),
            (dm.INF, dm.INF, F(0)),
        ),
    )
    assert any("triangle" in v for v in dm.validate(space))


def test_product_with_point_is_isometric_to_factor():
    point = dm.make_space(["*"], lambda p, q: F(0))
    chain = two_chain()
    assert dm.is_isometric(dm.product(chain, point), chain)


def test_product_of_chains_is_sup_combination():
    pr = dm.product(two_chain(), two_chain())
    assert pr.d("a,a", "b,b") == F(1)
    assert pr.d("a,a", "a,b") == F(1)
    assert pr.d("b,a", "a,b") == dm.INF
    assert dm.validate(pr) == []


def test_product_distance_is_max_everywhere():
    x = dm.discretized_interval(2)
    y = two_chain()
    pr = dm.product(x, y)
    for i, p in enumerate(x.points):
        for j, q in enumerate(y.points):
            for i2, p2 in enumerate(x.points):
                for j2, q2 in enumerate(y.points):
                    assert pr.d(f"{p},{q}", f"{p2},{q2}") == max(
                        x.dist[i][i2], y.dist[j][j2]
                    )


def test_sum_has_infinite_cross_distances():
    sm = dm.disjoint_sum(two_chain(), two_chain())
    assert dm.validate(sm) == []
    assert sm.d("0:a", "1:a") == dm.INF
    assert sm.d("1:b", "0:a") == dm.INF
    assert sm.d("0:a", "0:b") == F(1)


def test_quotient_by_equality_is_isometric_copy():
    chain = two_chain()
    q = dm.quotient(chain, [])
    assert q.points == chain.points
    assert q.dist == chain.dist


def test_quotient_collapsing_everything():
    q = dm.quotient(dm.discretized_interval(3), [("0", "1/3"), ("1/3", "2/3"), ("2/3", "1")])
    assert q.points == ("0",)
    assert q.dist == ((F(0),),)


def test_interval_quotient_is_directed_circle():
    for n in (2, 4, 8):
        q = dm.quotient(dm.discretized_interval(n), [("0", "1")])
        assert dm.validate(q) == []
        assert dm.is_isometric(q, dm.discretized_directed_circle(n))


def test_quotient_matches_chain_formula_oracle():
    space = dm.discretized_interval(4)
    pairs = [("0", "1")]
    q = dm.quotient(space, pairs)
    class_of = {}
    for i, p in enumerate(space.points):
        class_of[i] = "0" if p in ("0", "1") else p
    for i, p in enumerate(space.points):
        for j, r in enumerate(space.points):
            expected = quotient_distance_oracle(space, class_of, i, j)
            assert q.d(class_of[i], class_of[j]) == expected


def test_quotient_never_increases_distances():
    rng = random.Random(13)
    space = dm.discretized_interval(5)
    points = list(space.points)
    for _ in range(10):
        pairs = [(rng.choice(points), rng.choice(points)) for _ in range(2)]
        q = dm.quotient(space, pairs)
        # rebuild the class naming to map points into the quotient
        parent = {p: p for p in points}

        def find(p):
            while parent[p] != p:
                parent[p] = parent[parent[p]]
                p = parent[p]
            return p

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        cls = {}
        for p in points:
            root = find(p)
            members = [x for x in points if find(x) == root]
            cls[p] = min(members)
        for p in points:
            for r in points:
                assert q.d(cls[p], cls[r]) <= space.d(p, r)


def test_reflect_is_involution():
    for space in (two_chain(), dm.discretized_interval(3)):
        assert dm.reflect(dm.reflect(space)) == space


def test_reflect_swaps_infinite_triangle():
    space = dm.discretized_interval(2)
    r = dm.reflect(space)
    assert space.d("0", "1/2") == F(1, 2) and space.d("1/2", "0") == dm.INF
    assert r.d("0", "1/2") == dm.INF and r.d("1/2", "0") == F(1, 2)


def test_symmetric_space_is_reflect_fixed_point():
    sym = dm.make_space(["a", "b"], lambda p, q: F(0) if p == q else F(2))
    assert dm.validate(sym) == []
    assert dm.reflect(sym) == sym


def test_reflect_of_product_is_product_of_reflects():
    x, y = two_chain(), dm.discretized_interval(2)
    assert dm.reflect(dm.product(x, y)) == dm.product(dm.reflect(x), dm.reflect(y))


def test_ball_with_zero_radius_is_empty():
    assert dm.ball(dm.discretized_interval(4), "0", F(0), "future") == ()
    assert dm.ball(dm.discretized_interval(4), "0", F(0), "past") == ()


def test_future_ball_is_strict():
    space = dm.discretized_interval(4)
    members = dm.ball(space, "0", F(1, 2), "future")
    assert set(members) == {"0", "1/4"}  # 1/2 excluded by strictness


def test_past_ball_of_minimum_is_singleton():
    space = dm.discretized_interval(4)
    assert dm.ball(space, "0", F(1000), "past") == ("0",)


def test_ball_rejects_bad_direction():
    with pytest.raises(DomainError):
        dm.ball(two_chain(), "a", F(1), "sideways")


def test_discretized_interval_one_is_two_chain():
    assert dm.is_isometric(dm.discretized_interval(1), two_chain())


def test_circle_arc_lengths_sum_to_one():
    c = dm.discretized_directed_circle(6)
    for p in c.points:
        for q in c.points:
            if p != q:
                assert c.d(p, q) + c.d(q, p) == F(1)


def test_builders_validate():
    for n in (1, 2, 5, 8):
        assert dm.validate(dm.discretized_interval(n)) == []
        assert dm.validate(dm.discretized_directed_circle(n)) == []


def test_matrix_file_round_trip():
    for space in (two_chain(), dm.discretized_interval(3), dm.discretized_directed_circle(4)):
        text = dm.format_dmetric(space)
        assert dm.format_dmetric(dm.parse_dmetric(text)) == text


def test_parse_entry_forms():
    space = dm.parse_dmetric("points 2 a b\n0 0.5\ninf 0\n")
    assert space.d("a", "b") == F(1, 2)
    assert space.d("b", "a") == dm.INF


def test_parse_errors():
    with pytest.raises(InputSyntaxError):
        dm.parse_dmetric("points 2 a b\n0 1\n")  # missing row
    with pytest.raises(InputSyntaxError):
        dm.parse_dmetric("points 2 a b\n0 1 2\n3 0\n")  # row width
    with pytest.raises(InputSyntaxError):
        dm.parse_dmetric("points 1 a\n-1\n")  # negative
    with pytest.raises(InputSyntaxError):
        dm.parse_dmetric("size 1 a\n0\n")  # bad header
