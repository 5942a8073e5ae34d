from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from longedge.coeffs import (
    b_coeffs,
    cor,
    diffq,
    q_beta_delta,
    q_delta_linearized,
    template_coefficients,
)
from longedge.polygon import HTPolygon, beta_of, polygon_stats, reorderings, toric_invariants
from longedge.severi import (
    METHODS,
    Poly,
    n_bruteforce,
    n_from_q,
    q_from_n,
    q_geometric,
    q_polygon,
    report,
    t_delta,
    that_delta,
)


def triangle(d):
    return HTPolygon(0, (0,) * d, (1,) * d)


def rectangle(a, b):
    return HTPolygon(a, (0,) * b, (0,) * b)


SHARP = HTPolygon(0, (-1, -1, 0, 0), (2, 2, 0, 0))
TRAPEZOID = HTPolygon(2, (0, 0, 0, 0), (2, 2, 0, 0))
TWO_SIDED = HTPolygon(2, (0, 0, 0, 1, 1, 1), (2, 2, 2, 0, 0, 0))

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)


def hat_poly(delta):
    out = Poly({})
    for name, c in that_delta(delta).linear:
        out = out + Poly.variable(name).scale(c)
    return out


class TestPoly:
    def test_arithmetic_and_evaluation(self):
        x, y = Poly.variable("x"), Poly.variable("y")
        p = (x + y.scale(2)) * (x + Poly.constant(3))
        assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == (2 + 1) * (2 + 3)
        # absent variables count as zero
        assert p.evaluate({"x": 1}) == 4
        assert Poly.constant(0) == Poly({})
        assert hash(x + y) == hash(y + x)

    def test_repr_round_trip_terms(self):
        p = Poly.variable("x") * Poly.variable("x")
        assert p.terms == {(("x", 2),): Fraction(1)}


class TestUniversalPolynomials:
    def test_one_node_form(self):
        assert that_delta(1).linear == (
            ("x", Fraction(3)),
            ("y", Fraction(2)),
            ("z", Fraction(0)),
            ("w", Fraction(1)),
            ("s", Fraction(-1)),
        )

    def test_two_node_form(self):
        assert that_delta(2).linear == (
            ("x", Fraction(-21)),
            ("y", Fraction(-39, 2)),
            ("z", Fraction(-3)),
            ("w", Fraction(-7, 2)),
            ("s", Fraction(9, 2)),
            ("s1", Fraction(1)),
        )

    def test_as_dict_strings(self):
        d = that_delta(2).as_dict()
        assert d["delta"] == 2
        assert d["coefficients"]["y"] == "-39/2"

    def test_exp_transform_identities(self):
        h1, h2, h3 = hat_poly(1), hat_poly(2), hat_poly(3)
        assert t_delta(0) == Poly.constant(1)
        assert t_delta(1) == h1
        assert t_delta(2) == h2 + (h1 * h1).scale(Fraction(1, 2))
        assert t_delta(3) == h3 + h1 * h2 + (h1 * h1 * h1).scale(Fraction(1, 6))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_one_node_count_on_smooth_plane_curves(self, d):
        values = {"x": d * d, "y": -3 * d, "z": 9, "w": 3}
        assert t_delta(1).evaluate(values) == 3 * (d - 1) ** 2
        assert that_delta(1).evaluate_t(d * d, -3 * d, 9, 3) == 3 * (d - 1) ** 2

    def test_delta_validation(self):
        with pytest.raises(ValueError):
            that_delta(0)
        with pytest.raises(ValueError):
            t_delta(-1)


class TestBruteForce:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_one_node_plane_curves(self, d):
        assert n_bruteforce(triangle(d), 1) == 3 * (d - 1) ** 2

    def test_classical_plane_values(self):
        assert n_bruteforce(triangle(3), 2) == 21
        assert n_bruteforce(triangle(4), 2) == 225
        assert n_bruteforce(triangle(5), 2) == 882
        assert n_bruteforce(triangle(4), 3) == 675
        assert n_bruteforce(triangle(5), 3) == 7915

    def test_zero_nodes(self):
        for p in (triangle(2), SHARP, TRAPEZOID):
            assert n_bruteforce(p, 0) == 1

    def test_preconditions(self):
        with pytest.raises(ValueError, match="shortest edge has length 1"):
            n_bruteforce(triangle(1), 3)
        with pytest.raises(ValueError):
            n_bruteforce(triangle(2), -1)


class TestClosedForms:
    @pytest.mark.parametrize("d", [1, 2, 3, 5])
    def test_plane_one_node(self, d):
        assert q_polygon(triangle(d), 1) == 3 * d * d - 6 * d + 3

    @pytest.mark.parametrize("a,b", [(2, 2), (3, 3), (2, 4)])
    def test_quadric_two_nodes(self, a, b):
        expected = -42 * a * b + 39 * (a + b) - 38
        assert q_polygon(rectangle(a, b), 2) == expected
        assert q_geometric(rectangle(a, b), 2) == expected

    def test_singular_example_one_node(self):
        # 3*area - 2*LL + 4 - 3 + v'_1 at area 36, LL 14, v'_1 = 1
        assert q_polygon(SHARP, 1) == 82
        assert q_geometric(SHARP, 1) == 82

    def test_singular_example_engages_end_correction(self):
        inv = toric_invariants(SHARP)
        bare = that_delta(2).evaluate(
            inv.Lsq, inv.LK, inv.Ksq, inv.c2tilde, [inv.S, inv.S_i.get(1, 0)]
        )
        assert cor(3, 2) == Fraction(21, 2)
        assert q_geometric(SHARP, 2) == bare + Fraction(21, 2)
        assert q_geometric(SHARP, 2) == q_polygon(SHARP, 2)

    def test_gorenstein_needs_no_correction(self):
        inv = toric_invariants(TRAPEZOID)
        assert q_geometric(TRAPEZOID, 2) == that_delta(2).evaluate(
            inv.Lsq, inv.LK, inv.Ksq, inv.c2tilde, [inv.S, inv.S_i.get(1, 0)]
        )

    def test_preconditions(self):
        with pytest.raises(ValueError, match="every edge of length >= 2"):
            q_polygon(rectangle(1, 3), 2)
        with pytest.raises(ValueError, match="every edge of length >= 2"):
            q_geometric(rectangle(1, 3), 2)
        with pytest.raises(ValueError):
            q_polygon(triangle(3), 0)


CORPUS = [
    triangle(1),
    triangle(2),
    triangle(3),
    triangle(4),
    triangle(5),
    rectangle(1, 1),
    rectangle(2, 2),
    rectangle(2, 3),
    rectangle(3, 3),
    rectangle(4, 4),
    TRAPEZOID,
    TWO_SIDED,
    SHARP,
]


class TestMethodAgreement:
    @pytest.mark.parametrize("p", CORPUS, ids=lambda p: f"dt{p.dt}h{p.height}")
    def test_three_routes_agree(self, p):
        max_delta = min(3, polygon_stats(p).min_edge)
        if max_delta < 1:
            pytest.skip("no delta satisfies the closed-form bound")
        qs_closed = [q_polygon(p, d) for d in range(1, max_delta + 1)]
        qs_geo = [q_geometric(p, d) for d in range(1, max_delta + 1)]
        assert qs_closed == qs_geo
        ns = n_from_q(qs_closed)
        for d in range(1, max_delta + 1):
            assert n_bruteforce(p, d) == ns[d - 1]

    @pytest.mark.parametrize("a,b", [(2, 3), (1, 4)])
    def test_rotation_invariance(self, a, b):
        tall, wide = rectangle(a, b), rectangle(b, a)
        for d in range(1, min(a, b) + 2):
            assert n_bruteforce(tall, d) == n_bruteforce(wide, d)
        for d in range(1, min(a, b) + 1):
            assert q_polygon(tall, d) == q_polygon(wide, d)


class TestWidthLevelIdentities:
    def test_reordering_shifts_by_leading_coefficient(self):
        # extremal edges have length 3, so cogenus c reorderings with
        # c + delta <= 3 move the width-level count by -2 A(delta) c
        p = TWO_SIDED
        base = beta_of(p)
        for delta in (1, 2):
            a = template_coefficients(delta).A
            q0 = q_beta_delta(base, delta)
            for ro in reorderings(p, 3 - delta):
                assert q_beta_delta(ro.beta, delta) == q0 - 2 * a * ro.cogenus

    @pytest.mark.parametrize(
        "p", [triangle(3), triangle(4), rectangle(3, 3), TRAPEZOID, TWO_SIDED, SHARP]
    )
    def test_end_corrections_bridge_the_linearization(self, p):
        # width-level count = linear form + end corrections, provided the
        # extremal edges, the height, and both end widths clear delta
        stats = polygon_stats(p)
        beta = beta_of(p)
        ell = min(stats.ell, stats.min_edge)
        for delta in (1, 2):
            if ell < delta or stats.height < delta:
                continue
            if 0 < p.dt < delta or 0 < p.db < delta:
                continue
            assert q_beta_delta(beta, delta) == (
                q_delta_linearized(beta, delta)
                + diffq(stats.tdet, delta)
                + diffq(stats.bdet, delta)
            )

    @pytest.mark.parametrize("p", [triangle(3), rectangle(2, 2), TRAPEZOID, SHARP])
    def test_internal_vertices_shift_q(self, p):
        # per-vertex corrections measure the gap between the polygon count
        # and the width-level count
        stats = polygon_stats(p)
        for delta in (1, 2):
            if stats.min_edge < delta:
                continue
            gap = q_polygon(p, delta) - q_beta_delta(beta_of(p), delta)
            assert gap == sum(
                b_coeffs(delta, i) * n for i, n in stats.vprime.items()
            )


class TestTransforms:
    def test_first_orders(self):
        q1, q2 = Fraction(5), Fraction(-3)
        assert n_from_q([q1]) == [q1]
        assert n_from_q([q1, q2]) == [q1, q2 + q1 * q1 / 2]

    @given(st.lists(rationals, min_size=1, max_size=6))
    @settings(max_examples=60)
    def test_round_trip(self, qs):
        assert q_from_n(n_from_q(qs)) == [Fraction(q) for q in qs]
        assert n_from_q(q_from_n(qs)) == [Fraction(q) for q in qs]


class TestReport:
    def test_plane_quartic_all_methods(self):
        rep = report(triangle(4), 2)
        data = rep.to_dict()
        assert rep.agree is True
        for m in METHODS:
            assert data["n"][m] == ["1", "27", "225"]
        assert data["q"]["closed"] == ["27", "-279/2"]
        assert data["skipped"] == {}
        assert data["polygon"] == {"dt": 0, "left": [[0, 4]], "right": [[1, 4]]}

    def test_short_edges_skip_closed_forms_only(self):
        rep = report(rectangle(1, 3), 2)
        data = rep.to_dict()
        assert len(data["n"]["bruteforce"]) == 3
        assert len(data["n"]["closed"]) == 2
        assert "precondition unmet" in data["skipped"]["closed"]["2"]
        assert "precondition unmet" in data["skipped"]["geometric"]["2"]
        assert rep.agree is True

    def test_method_subset_and_validation(self):
        rep = report(triangle(3), 1, methods=("closed",))
        assert set(rep.n) == {"closed"}
        with pytest.raises(ValueError, match="unknown method"):
            report(triangle(3), 1, methods=("magic",))
        with pytest.raises(ValueError):
            report(triangle(3), -1)

    def test_disagreement_is_reported_not_raised(self, monkeypatch):
        import longedge.severi as sv

        monkeypatch.setattr(sv, "q_geometric", lambda p, d: Fraction(999))
        rep = sv.report(triangle(3), 1)
        assert rep.agree is False
        assert rep.disagreements[0]["kind"] in {"n", "q"}
        assert "999" in rep.disagreements[0]["values"]["geometric"]
