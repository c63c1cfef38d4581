"""Smoke tests for the python bindings: a thin pass over every exported call."""

import pytest

import pfolia


def test_p_power_matches_oracle_on_the_worked_example():
    # alpha + (t^2+t) beta + (t^4+t) dt squares to itself (ordinary, p = 2)
    u, v, w = [1], [0, 1, 1], [0, 1, 0, 0, 1]
    closed = pfolia.p_power(2, 1, u, v, w, "ordinary")
    oracle = pfolia.p_power_oracle(2, 1, u, v, w, "ordinary")
    assert closed == oracle
    assert closed["u"] == u and closed["v"] == v and closed["w"] == w


def test_cube_formula_sample_against_oracle():
    import itertools
    import random

    rng = random.Random(20240809)
    for _ in range(50):
        u = [rng.randrange(3) for _ in range(2)]
        v = [rng.randrange(3) for _ in range(2)]
        w = [rng.randrange(3) for _ in range(4)]
        for lie in pfolia.LIE_TYPES:
            assert pfolia.p_power(3, 1, u, v, w, lie) == pfolia.p_power_oracle(3, 1, u, v, w, lie)


def test_bracket_and_chart_transform():
    # [t^2 a + b, b + dt] = 0 in char 2
    r = pfolia.bracket(2, 1, [0, 0, 1], [1], [], [], [1], [1])
    assert r["u"] == [] and r["v"] == [] and r["w"] == []
    image, n = pfolia.chart_transform(2, 1, [0, 0, 1], [1], [])
    assert n == 2
    assert image["u"] == [1] and image["v"] == [0, 0, 1] and image["chart"] == "s"


def test_check_report():
    rep = pfolia.check(2, 1, [1, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1], "ordinary")
    assert rep["p_closed"] and rep["saturated"] and rep["k_trivial"]
    assert rep["lambda"] == "1"
    assert rep["det_twist"] == -2
    assert rep["separability"] == "inseparable-albanese"
    assert rep["matched_rows"] == ["2iv.3"]
    assert rep["sigma_invariant"]


def test_rank2_check():
    rep = pfolia.rank2_check(2, 1, [0, 0, 1], [1], [], [], [1], [1], "superspecial")
    assert rep["involutive"] and rep["p_closed"] and rep["saturated"]
    assert rep["det_twist"] == -2
    with pytest.raises(ValueError):
        pfolia.rank2_check(2, 1, [1], [], [], [0, 1], [], [], "ordinary")


def test_tables():
    assert pfolia.table_conditions(2, "ordinary", [1, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1])
    assert not pfolia.table_conditions(3, "supersingular-not-ss", [1, 0, 0, 1, 0, 0, 0, 1])
    res = pfolia.verify_tables(3, "p-rank-one", "both", 1)
    assert res["ok"]
    assert res["exhaustive"]["ground_truth_count"] == res["exhaustive"]["table_count"]


def test_census_runs_and_is_deterministic():
    a = pfolia.census(2, 1, "ordinary", p_closed=True, saturated=True, inseparable=True)
    b = pfolia.census(2, 1, "ordinary", p_closed=True, saturated=True, inseparable=True,
                      workers=3)
    assert a == b
    assert a["anomaly_count"] == 0
    assert a["total_scanned"] == 2048
    csv = pfolia.census_csv(2, 1, "ordinary", p_closed=True, saturated=True, inseparable=True)
    assert csv.splitlines()[0] == "# pfolia.census.v1"


def test_torsion():
    assert pfolia.torsion_bound("C2.1a", 2) == 6
    assert pfolia.torsion_bound("C1.b", 3) == 1
    assert pfolia.torsion_bound("B", 2) is None
    assert pfolia.global_lcm() == 432
    with pytest.raises(ValueError):
        pfolia.torsion_bound("C2.2a", 3)
    cat = pfolia.torsion_catalog(n=6)
    assert [c["id"] for c in cat["cases"]] == ["C1.d"]


def test_gallery_all_pass():
    verdicts = pfolia.gallery()
    assert len(verdicts) == 6
    assert all(v["pass"] for v in verdicts)
